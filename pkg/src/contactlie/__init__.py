"""Contact geometry, Lie algebra cohomology and prequantization with exact arithmetic."""

from .coeff import GaussRational, I, Poly, gauss
from .contact import ContactSpace, make_contact
from .exterior import Form, MultiVec, dx, Dx, schouten, wedge
from .expr import format_value, parse
from .liealg import Ideal, LieAlgebra, LieModule

__all__ = [
    "ContactSpace",
    "Dx",
    "Form",
    "GaussRational",
    "I",
    "Ideal",
    "LieAlgebra",
    "LieModule",
    "MultiVec",
    "Poly",
    "dx",
    "format_value",
    "gauss",
    "make_contact",
    "parse",
    "schouten",
    "wedge",
]
