"""Exact QSym/NSym arithmetic, dual immaculate functions and their Pieri rules."""

from .algebra import Basis, Element, Family, Tensor
from .compositions import (
    SkewShape,
    comp_of,
    compositions_of,
    is_vertical_strip,
    parse_composition,
    parse_skew,
    set_of,
    skew,
)
from .hopf import left_harpoon, pair, right_harpoon
from .immaculate import (
    RI,
    RS,
    I,
    S,
    dual_immaculate_f,
    expand_in_dual_immaculate,
    expand_in_immaculate,
    immaculate_h,
    rs_dual_immaculate_f,
    rs_immaculate_h,
)
from .nsym import E, H
from .pieri import (
    multiplicity_check,
    pieri_coeff,
    pieri_coeff_oracle,
    skew_pieri,
    skew_pieri_oracle,
    skew_pieri_rs,
    verify_skew_pieri,
)
from .qsym import F, M
from .tableaux import Tableau, descent_set, enumerate_sit

__all__ = [
    "Basis",
    "E",
    "Element",
    "F",
    "Family",
    "H",
    "I",
    "M",
    "RI",
    "RS",
    "S",
    "SkewShape",
    "Tableau",
    "Tensor",
    "comp_of",
    "compositions_of",
    "descent_set",
    "dual_immaculate_f",
    "enumerate_sit",
    "expand_in_dual_immaculate",
    "expand_in_immaculate",
    "immaculate_h",
    "is_vertical_strip",
    "left_harpoon",
    "multiplicity_check",
    "pair",
    "parse_composition",
    "parse_skew",
    "pieri_coeff",
    "pieri_coeff_oracle",
    "right_harpoon",
    "rs_dual_immaculate_f",
    "rs_immaculate_h",
    "set_of",
    "skew",
    "skew_pieri",
    "skew_pieri_oracle",
    "skew_pieri_rs",
    "verify_skew_pieri",
]
