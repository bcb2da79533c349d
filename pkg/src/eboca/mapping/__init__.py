from eboca.mapping.doc import (
    Constant,
    Join,
    LogicalSource,
    MappingDoc,
    MappingError,
    Reference,
    Template,
    TripleMapRule,
    parse_mapping_doc,
)
from eboca.mapping.engine import SourceError, load_records, materialize

__all__ = [
    "Constant",
    "Join",
    "LogicalSource",
    "MappingDoc",
    "MappingError",
    "Reference",
    "SourceError",
    "Template",
    "TripleMapRule",
    "load_records",
    "materialize",
    "parse_mapping_doc",
]
