"""revsense: how string-repetitiveness measures respond to reversal.

Library surface: texts over ordered integer alphabets, suffix/rotation
structures, BWT variants with run counts, four Lempel-Ziv parsings, the
lexicographic parse, substring complexity, right-extension counts, the
extremal string families, closed-form predictors, and a sweep/verify
harness.  `python -m revsense --help` is the command-line entry.
"""

from .bwt import TransformResult, bbwt, bwt, bwt_range, bwt_sentinel
from .families import (
    FAMILIES,
    FamilySpec,
    Prediction,
    T55,
    central_word,
    fib_property_check,
    fibonacci_word,
    generate,
    predict,
    predict_transform,
    predictions,
)
from .harness import (
    MEASURE_IDS,
    SensitivityReport,
    SweepRow,
    VerifyRow,
    measure_value,
    rows_from_csv,
    rows_to_csv,
    sensitivity_report,
    sweep,
    verify,
)
from .lexparse import lex_parse
from .lz import Parsing, Phrase, lz_end_greedy, lz_end_optimal, lz_no_overlap, lz_parse
from .measures import right_extension_count, right_extensions, substring_complexity
from .suffixes import (
    SuffixContext,
    build_suffix_context,
    cyclic_rotation_order,
    naive_cyclic_rotation_order,
    naive_suffix_context,
)
from .text import (
    RunLengthEncoding,
    Text,
    concat,
    is_lyndon,
    lyndon_factorize,
    occurrences,
    omega_compare,
    reverse,
    rle,
    rotate,
)

__version__ = "0.1.0"
