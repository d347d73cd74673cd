"""Singular loci of Schubert varieties in GL(n)/B, with verification tools."""

from .cograssmann import (
    Cobigrassmannian,
    coessential_set,
    corectrices,
    leq_cobigrassmannian,
)
from .configs import (
    ConfigI,
    ConfigII,
    ConfigurationError,
    Region,
    enumerate_config_I,
    enumerate_config_II,
    sigma,
    tau,
)
from .lambdamax import lambda_max, max_below_with_descent
from .oracle import equivalence_harness, singular_locus_brute, tangent_dim
from .perm import (
    Perm,
    bruhat_leq,
    coset_rep,
    demazure_star,
    drop_agreements,
    length,
    longest_in_parabolic,
    pattern_occurrences,
    rank,
    transposition_length_delta,
)
from .quasires import (
    CovexillaryError,
    build_quasi_resolutions,
    exceptional_components,
    good_family_witness,
    select_frame,
    transport_configuration,
)
from .singlocus import (
    KLPolynomial,
    QuadraticCone,
    RankOneCone,
    SingularComponent,
    containment_report,
    is_smooth,
    kl_and_mult,
    singular_components,
)

__all__ = [
    "Cobigrassmannian",
    "ConfigI",
    "ConfigII",
    "ConfigurationError",
    "CovexillaryError",
    "KLPolynomial",
    "Perm",
    "QuadraticCone",
    "RankOneCone",
    "Region",
    "SingularComponent",
    "bruhat_leq",
    "build_quasi_resolutions",
    "coessential_set",
    "containment_report",
    "corectrices",
    "coset_rep",
    "demazure_star",
    "drop_agreements",
    "enumerate_config_I",
    "enumerate_config_II",
    "equivalence_harness",
    "exceptional_components",
    "good_family_witness",
    "is_smooth",
    "kl_and_mult",
    "lambda_max",
    "length",
    "leq_cobigrassmannian",
    "longest_in_parabolic",
    "max_below_with_descent",
    "pattern_occurrences",
    "rank",
    "select_frame",
    "sigma",
    "singular_components",
    "singular_locus_brute",
    "tangent_dim",
    "tau",
    "transport_configuration",
    "transposition_length_delta",
]

__version__ = "0.1.0"
