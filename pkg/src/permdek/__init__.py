"""permdek: stack/queue realizable permutations, the bijection between
them, lattice-path codecs, a multi-container obtainability explorer, and
the deque solitaire game with exact solvers.

The hot search kernels come in two interchangeable flavors: a compiled
extension and a pure-Python fallback; ``permdek._core.BACKEND`` names
the one in use (set ``PERMDEK_PURE=1`` to force the fallback).
"""
from ._core import BACKEND
from .perms import (
    Perm,
    PermutationError,
    avoids_312,
    avoids_321,
    contains_pattern,
    format_permutation,
    parse_permutation,
    record_setters,
    two_increasing_decomposition,
    validate_permutation,
)
from .machines import (
    MachineOp,
    MachineTrace,
    realize_with_queue,
    realize_with_set,
    realize_with_stack,
    storage_cost,
    trace_height_profile,
)
from .paths import (
    LatticePath,
    catalan,
    classify_path,
    cycle_lemma_canonical,
    decode_queueable,
    decode_stackable,
    enumerate_dyck_paths,
    knuth_richards,
    knuth_richards_inv,
    queueit,
    remove_peaks,
    restore_peaks,
    stackit,
)
from .explore import (
    CountTable,
    MachineConfig,
    all_permutations,
    count_obtainable,
    obtainable,
    verify_bijection_suite,
)
from .dek import (
    DekState,
    apply_move,
    clairvoyant_winnable,
    hint,
    legal_moves,
    new_game,
    optimal_policy_value,
    win_probability_clairvoyant,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Perm",
    "PermutationError",
    "avoids_312",
    "avoids_321",
    "contains_pattern",
    "format_permutation",
    "parse_permutation",
    "record_setters",
    "two_increasing_decomposition",
    "validate_permutation",
    "MachineOp",
    "MachineTrace",
    "realize_with_queue",
    "realize_with_set",
    "realize_with_stack",
    "storage_cost",
    "trace_height_profile",
    "LatticePath",
    "catalan",
    "classify_path",
    "cycle_lemma_canonical",
    "decode_queueable",
    "decode_stackable",
    "enumerate_dyck_paths",
    "knuth_richards",
    "knuth_richards_inv",
    "queueit",
    "remove_peaks",
    "restore_peaks",
    "stackit",
    "CountTable",
    "MachineConfig",
    "all_permutations",
    "count_obtainable",
    "obtainable",
    "verify_bijection_suite",
    "DekState",
    "apply_move",
    "clairvoyant_winnable",
    "hint",
    "legal_moves",
    "new_game",
    "optimal_policy_value",
    "win_probability_clairvoyant",
    "__version__",
]
