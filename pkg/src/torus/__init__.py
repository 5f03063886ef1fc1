"""Word problems, bracketings, corridor stacks and orbit growth in
free-by-cyclic groups ``F x|_phi Z``."""

from .bracketing import (
    Bracket,
    Bracketing,
    canonical_bracketing,
    content_bound_ratio,
    optimal_bracketing_oracle,
    validate,
)
from .graphmap import (
    Automorphism,
    GraphMap,
    MarkedGraph,
    Presentation,
    apply_tight,
    is_vanishing,
    iterate,
    mapping_torus,
    rose_of,
)
from .group import (
    T,
    GroupWord,
    NormalForm,
    format_group_word,
    is_identity,
    normal_form,
    parse_group_word,
    random_null_word,
)
from .growth import check_brinkmann, growth_table, k_exhaustive
from .powers import corridor_bound, lattice_decompose, rewrite_power
from .stack import (
    build_stack,
    colour_intervals,
    corridor_lengths,
    estimate_bcc,
    trace_future,
    trace_past,
)
from .words import Alphabet, CyclicWord, Word, concat, cyclic_reduce, invert, reduce

__version__ = "0.1.0"


def bundled(name: str) -> Automorphism:
    """One of the shipped automorphisms: identity, inversion, permutation, fib, psi, rank3."""
    import json
    from importlib import resources

    text = resources.files("torus.data").joinpath(f"{name}.json").read_text()
    return Automorphism.from_dict(json.loads(text))
