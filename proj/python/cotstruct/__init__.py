"""Co-t-structure engine: decomposition triangles over path-algebra complexes."""

from ._core import (  # noqa: F401
    Complex,
    NonTerminatingError,
    Decomposition,
    PathAlgebra,
    check_setup2,
    cohomology,
    cone_cohomology,
    decompose,
    direct_sum,
    hom_dimension,
    in_A_bar,
    in_B,
    is_contractible,
    nondegeneracy_witnesses,
    parse_algebra,
    parse_complex,
    random_complex,
    serialize_complex,
    stalk,
    suspend,
    verify_axioms,
)

__all__ = [
    "Complex",
    "NonTerminatingError",
    "Decomposition",
    "PathAlgebra",
    "check_setup2",
    "cohomology",
    "cone_cohomology",
    "decompose",
    "direct_sum",
    "hom_dimension",
    "in_A_bar",
    "in_B",
    "is_contractible",
    "nondegeneracy_witnesses",
    "parse_algebra",
    "parse_complex",
    "random_complex",
    "serialize_complex",
    "stalk",
    "suspend",
    "verify_axioms",
]
