"""Mechanical classification of small graphs as character degree graphs of
solvable groups: the three-vertex growth condition, a forbidden family of
graphs, vertex admissibility checks, supporting exact number theory, and a
knowledge base of literature facts, behind a CLI and an HTTP service."""

from .admissibility import (
    Verdict,
    VerdictValue,
    incident_edge_subgraphs,
    is_admissible,
    is_strongly_admissible,
    neighbor_edge_subgraphs,
)
from .classifier import Classification, Status, classify, explain
from .enumeration import EnumerationReport, all_graphs, enumerate_classify
from .errors import (
    CDGraphError,
    FactorizationBudgetError,
    GraphError,
    GraphFormatError,
    KBError,
    KBInconsistencyError,
    PreconditionError,
    SizeCapError,
)
from .family import FamilyLabeling, family_graph, is_in_family
from .graphs import (
    CanonicalKey,
    Graph,
    are_isomorphic,
    canonical_form,
    canonical_key,
    common_neighbors,
    connected_components,
    degree,
    delete_edges,
    delete_vertex,
    diameter,
    format_graph,
    is_complete,
    new_graph,
    parse_graph,
)
from .kb import Fact, KnowledgeBase, load_kb, load_seed_kb, lookup, save_kb, seed_kb_path
from .numtheory import (
    QuotientQuery,
    ZsigmondyResult,
    cyclotomic_eval,
    lemma25_check,
    quotient_prime_divisors,
    quotient_value,
    zsigmondy,
)
from .palfy import palfy_witness, satisfies_palfy

__version__ = "0.1.0"
