"""Groebner-Shirshov bases for free associative, Lie and commutative algebras,
with Lyndon-Shirshov word machinery and monoid presentations."""

from .commutative import (CommutativeOrder, CommutativePolynomial, buchberger, check_groebner,
                          delta_split, eps_lift, eps_order, gamma, parse_commutative,
                          reduced_groebner, s_polynomial)
from .engine import (Ambiguity, CompletionResult, GsReport, Status, check_gs_basis, composition,
                     find_ambiguities, irr, is_gs_basis, is_trivial, reduced_basis, shirshov_complete)
from .errors import (AlphabetMismatchError, InfiniteULError, InternalContradictionError,
                     NoEliminationError, NonMonicError, NotALieElementError, NotALSWError,
                     NotClosedError, ParseError, ShirshovError, ZeroPolynomialError)
from .lie import (check_lie_gs_basis, lie_composition, lie_irr, lie_normal_form,
                  pbw_shirshov_check)
from .lyndon import (Leaf, LieElement, Node, cfl_bracketing, eliminate, expand, is_alsw, is_nlsw,
                     lie_recognize, nlsw_enumerate, shirshov_factorize, special_bracketing,
                     standard_bracketing)
from .plactic import plactic_column_product, plactic_row_product, tableau_normal_form
from .poly import FreePolynomial, parse_polynomial
from .presentations import (Presentation, chinese_normal_form, chinese_relations, drinfeld_kohno,
                            knuth_relations, load_fixture, load_presentation, semigroup_to_algebra,
                            word_problem)
from .reduction import normal_form, reduce_with_trace
from .words import Alphabet, DegLex, EpsOrder, ShirshovLex, parse_word

__all__ = [name for name in dir() if not name.startswith("_")]
