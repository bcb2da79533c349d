from eboca.query.catalog import CATALOG, CompetencyQuestion, run_cq
from eboca.query.engine import (
    BindingSet,
    Filter,
    Query,
    QueryError,
    TriplePattern,
    Var,
    filter_holds,
    parse_query,
    solve,
)

__all__ = [
    "BindingSet",
    "CATALOG",
    "CompetencyQuestion",
    "Filter",
    "Query",
    "QueryError",
    "TriplePattern",
    "Var",
    "filter_holds",
    "parse_query",
    "run_cq",
    "solve",
]
