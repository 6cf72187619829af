"""Certified ropelength lower bounds for links on the cubic lattice.

Pipeline: lattice link -> projected diagram and special cord diagrams ->
coherent rewriting -> Seifert circle count, checked against the
Morton-Franks-Williams bound from the HOMFLY-PT polynomial.
"""

from .bounds import BoundsCertificate, CertificateError, certify, ropelength_lower, verify_certificate
from .diagram import DiagramError, PlanarDiagram, parse_pd, pd_code
from .families import FamilySpec, family_braid_index, family_pd, pretzel, torus2, twist
from .homfly import (
    CrossingCapExceeded,
    OddSpanError,
    a_span,
    absolute_mfw,
    homfly,
    homfly_result,
    mfw_bound,
)
from .laurent import LaurentPoly2
from .lattice import (
    FIXTURES,
    LatticeError,
    LatticeLink,
    load_fixture,
    load_lattice_link,
    parse_lattice_link,
    serialize_lattice_link,
    step_counts,
    validate,
)
from .projection import CordDiagram, project
from .seifert import (
    CoherenceError,
    classify_overlap,
    companion_arc,
    is_coherent,
    make_coherent,
    rewrite_diagram,
    smooth,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsCertificate", "CertificateError", "certify", "ropelength_lower", "verify_certificate",
    "DiagramError", "PlanarDiagram", "parse_pd", "pd_code",
    "FamilySpec", "family_braid_index", "family_pd", "pretzel", "torus2", "twist",
    "CrossingCapExceeded", "OddSpanError", "a_span", "absolute_mfw", "homfly", "homfly_result", "mfw_bound",
    "LaurentPoly2",
    "FIXTURES", "LatticeError", "LatticeLink", "load_fixture", "load_lattice_link", "parse_lattice_link",
    "serialize_lattice_link", "step_counts", "validate",
    "CordDiagram", "project",
    "CoherenceError", "classify_overlap", "companion_arc", "is_coherent", "make_coherent", "rewrite_diagram", "smooth",
]
