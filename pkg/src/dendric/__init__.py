"""Factor languages of shift spaces at a finite horizon: extension graphs,
complexity, return words, codes and dendricity verdicts."""

from .codes import (
    CodeSet,
    check_return_count_theorem,
    code_flags,
    completeness,
    group_bifix_code,
    random_maximal_suffix_code,
    return_words,
    rho,
)
from .complexity import (
    asymptotic_classes,
    check_cassaigne,
    complexity_profile,
    ls_forest,
    omega_estimate,
)
from .dendricity import (
    check_left_special_criterion,
    check_order_equivalence,
    check_simple_tree_horizon,
    dendricity_scan,
    eventually_neutral_scan,
)
from .exceptions import DendricError, InsufficientHorizon
from .extension import ExtensionGraph, extension_graph, generalized_extension_graph
from .language import (
    FactorLanguage,
    Template,
    biext,
    language_from_substitution,
    language_from_templates,
    language_from_words,
    left_ext,
    right_ext,
)
from .transforms import (
    alphabetic_image,
    bifix_decode,
    block_coding,
    coding_morphism,
    higher_block,
    sliding_block_image,
)
from .words import Alphabet, Morphism, apply, iterate, parse_morphism

__version__ = "0.1.0"
