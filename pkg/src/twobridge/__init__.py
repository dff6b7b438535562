"""Tabulation, diagrams and identification of 2-bridge links."""
from .diagram import PlanarDiagram, GaussCode, build_diagram, component_count, gauss_code, mirror, parse_pd
from .enumerator import RawCandidate, TabulationRow, enumerate_raw, tabulate, tabulate_range
from .equivalence import LinkClass, canonicalize, class_members, mod_inverse, reverse_orientation, unoriented_equivalent
from .identify import (
    Identification,
    LinkTableEntry,
    identify_class,
    ingest_table,
    load_reference_fixture,
    shipped_table,
    verify_fixture,
)
from .invariants import IdentificationKey, identification_key, kauffman_bracket, linking_number, writhe
from .laurent import Laurent
from .rational import compositions, eval_cf, expansions
from .splitting import SplittingCertificate, match_pattern, splitting_number

__version__ = "0.1.0"
