"""Exact computational commutative algebra over small coefficient fields.

Polynomial quotient rings, Groebner bases, finitely presented modules,
Koszul homology, and Hilbert-Samuel multiplicities, all in exact arithmetic,
plus verifiers for the length/multiplicity identities they satisfy.
"""

from .errors import EngineError, ParseError
from .fpmodules import (FPModule, ModuleGB, ModuleMap, ModuleVector,
                        gamma_saturation, kernel_of_map, module_gb,
                        module_origin_support, preimage_submodule,
                        subquotient, syzygies, unit_vectors)
from .groebner import (GroebnerBasis, buchberger, krull_dimension,
                       normal_form, origin_support_check, spolynomial,
                       standard_monomials)
from .koszul import (KoszulComplex, VirtualModule, koszul_complex,
                     koszul_differential, koszul_homology, phi_apply,
                     reduce_class)
from .multiplicity import (LengthSequence, Report, SearchResult,
                           evaluate_multiplicity, hilbert_samuel_lengths,
                           homology_lengths, ideal_power, multiplicity,
                           multiplicity_data, ord_check, parameter_colength,
                           search_parameters, serre_alternating_sum,
                           verify_factorization, verify_serre,
                           verify_serre2, verify_vanish)
from .polyring import (INFINITE, Monomial, MonomialOrder, OrderKind,
                       Polynomial, RingSpec)
from .scalars import FieldKind, FieldSpec, Scalar

__version__ = "0.1.0"

__all__ = [
    "EngineError", "ParseError", "FieldKind", "FieldSpec", "Scalar",
    "INFINITE", "Monomial", "MonomialOrder", "OrderKind", "Polynomial",
    "RingSpec", "GroebnerBasis", "buchberger", "normal_form", "spolynomial",
    "standard_monomials", "krull_dimension", "origin_support_check",
    "ModuleVector", "ModuleGB", "ModuleMap", "FPModule", "module_gb",
    "syzygies", "preimage_submodule", "subquotient", "kernel_of_map",
    "unit_vectors", "module_origin_support", "gamma_saturation",
    "KoszulComplex", "koszul_complex", "koszul_differential",
    "koszul_homology", "VirtualModule", "phi_apply", "reduce_class",
    "LengthSequence", "Report", "SearchResult", "ideal_power",
    "hilbert_samuel_lengths", "multiplicity", "multiplicity_data",
    "evaluate_multiplicity", "homology_lengths", "serre_alternating_sum",
    "verify_serre", "verify_factorization", "verify_vanish", "verify_serre2",
    "ord_check", "parameter_colength", "search_parameters", "__version__",
]
