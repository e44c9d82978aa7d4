"""Exact workbench for periodic order-preserving maps on the integers,
their term language, bounded equation checking, product models, and the
divisor-lattice of the varieties they generate."""

from .atoms import (
    GenerationTrace,
    atom_lcm_join,
    atoms,
    core,
    decompose_positive,
    delta,
    eval_word,
    final_periodicity,
    boost_final_periodicity,
    format_word,
    generate_atom,
    is_atom,
    p_set,
)
from .checker import (
    Bounds,
    Counterexample,
    HoldsWithinBounds,
    check_equation,
    enumerate_elements,
    verify_lemma_suite,
)
from .errors import LPregroupError
from .lex import LexElement, LexModel, format_lex, parse_lex
from .models import FnModel, Model
from .periodic import (
    PeriodicMap,
    cv_member,
    enumerate_maps,
    format_element,
    identity,
    make,
    parse_element,
    shift,
)
from .terms import (
    Equation,
    Term,
    axiom_commute,
    axiom_join,
    axiom_periodic,
    eval_term,
    format_equation,
    format_term,
    normalize as normalize_equation,
    parse_equation,
    parse_term,
)
from .variety import (
    VarietySig,
    axiom_for,
    divisors,
    downsets,
    parse_sig,
    format_sig,
    properly_periodic_bottom,
)
from .wreath import (
    WreathElement,
    WreathModel,
    format_wreath,
    is_local,
    parse_wreath,
    support,
    wreath,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
