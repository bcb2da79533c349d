"""Synthetic expansion of the DISNET fixture tables for scale testing.

``generate(out_dir, k)`` writes the same tables the bundled mapping reads,
with row counts linear in ``k`` and every foreign key resolving to exactly one
parent row.  Each row then yields a fixed number of triples, so the size of
the materialized graph is known in closed form: see :func:`expected_triples`.
"""

from __future__ import annotations

import csv
import shutil
from pathlib import Path

from eboca.resources import fixture_dir

# table -> (rows per unit of k, triples per row under sem-disnet.map)
TABLES = {
    "diseases.csv": (1, 4),  # type, label, identifier, linkout
    "genes.csv": (1, 4),  # type, symbol, description, linkout
    "drugs.csv": (1, 3),  # type, label, linkout
    "pathways.csv": (1, 3),
    "variants.csv": (1, 3),
    # type, 2 endpoint joins, score link, evidence link; score node: type, value;
    # evidence node: 2 types, derivedFrom, createdOn, version
    "disease_gene.csv": (2, 5 + 2 + 5),
    "disease_variant.csv": (1, 4 + 2),
    "gene_variant.csv": (1, 3),
    "gene_pathway.csv": (1, 3),
    "drug_disease.csv": (1, 3),
    "drug_drug.csv": (1, 3),
}
DD_TYPES = ("Marker", "Therapeutic", "Inferred")


def expected_triples(k: int) -> int:
    return sum(rows * per_row * k for rows, per_row in TABLES.values())


def scale_for(n_triples: int) -> int:
    """Smallest k whose expansion has at least ``n_triples`` triples."""
    per_k = expected_triples(1)
    return -(-n_triples // per_k)


def _write(path: Path, header: list[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def generate(out_dir: str | Path, k: int) -> Path:
    if k < 2:
        raise ValueError("k must be at least 2")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    shutil.copy(fixture_dir() / "sem-disnet.map", out / "sem-disnet.map")

    dis = lambda i: f"SD{i % k:07d}"
    gene = lambda i: str(100000 + i % k)
    drug = lambda i: f"CHEMBLX{i % k}"
    path = lambda i: f"WPX{i % k}"
    var = lambda i: f"rs{900000000 + i % k}"
    score = lambda i: f"{(i * 37) % 101 / 100:.2f}"

    _write(out / "diseases.csv", ["disease_id", "name"], ((dis(i), f"Synthetic disease {i}") for i in range(k)))
    _write(out / "genes.csv", ["gene_id", "symbol", "name"],
           ((gene(i), f"SG{i}", f"synthetic gene {i}") for i in range(k)))
    _write(out / "drugs.csv", ["drug_id", "name"], ((drug(i), f"Synthetic drug {i}") for i in range(k)))
    _write(out / "pathways.csv", ["pathway_id", "name"], ((path(i), f"Synthetic pathway {i}") for i in range(k)))
    _write(out / "variants.csv", ["variant_id"], ((var(i),) for i in range(k)))
    _write(out / "disease_gene.csv", ["assoc_id", "disease_id", "gene_id", "score", "pmid", "curated_on"],
           ((f"DG{i}", dis(i), gene(i * 7 + 1), score(i), str(10000000 + i), "2020-05-14")
            for i in range(2 * k)))
    _write(out / "disease_variant.csv", ["assoc_id", "disease_id", "variant_id", "score"],
           ((f"DV{i}", dis(i + 3), var(i), score(i + 11)) for i in range(k)))
    _write(out / "gene_variant.csv", ["assoc_id", "gene_id", "variant_id"],
           ((f"GV{i}", gene(i), var(i)) for i in range(k)))
    _write(out / "gene_pathway.csv", ["assoc_id", "gene_id", "pathway_id"],
           ((f"GP{i}", gene(i), path(i * 3)) for i in range(k)))
    _write(out / "drug_disease.csv", ["assoc_id", "drug_id", "disease_id", "association_type"],
           ((f"DD{i}", drug(i), dis(i * 5), DD_TYPES[i % 3]) for i in range(k)))
    _write(out / "drug_drug.csv", ["assoc_id", "drug_a", "drug_b"],
           ((f"DDI{i}", drug(i), drug(i + 1)) for i in range(k)))
    return out
