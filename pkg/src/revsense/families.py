"""String families with extremal reversal behaviour, their closed-form
measure predictions, and closed-form transform strings.

Families (addressable by these identifiers from the CLI and harness):

* u_k / u_k_rev          -- k five-symbol blocks b a #_i a &_i over the
                            interleaved order #_1 < &_1 < ... < a < b;
                            BWT runs grow from 3k+1 to 4k+1 under reversal.
* T_p / T_p_rev          -- staircase blocks over {x, a_i, b_i}; the LZ
                            size ratio z(rev)/z approaches 3 from below.
* w_sigma / w_sigma_rev  -- 3*sigma-2 symbols over a_1 < ... < a_sigma;
                            all LZ variants and the lex parse shrink from
                            5*sigma/2-2 to 2*sigma-1 under reversal.
* fib / central          -- Fibonacci words F_k and central words C_k.
* fib_plus               -- F_k with one extra 'a'; 4 BWT runs for even k.
* c_fib / c_fib_rev      -- 'c' prepended to F_k; the lex parse of the
                            reversal has 6 phrases for every odd k >= 9.
* unary_plus             -- a b^(n-1); right-extension count doubles
                            under reversal.
* t55                    -- fixed 55-symbol binary witness with z = 14
                            and z = 6 after reversal.

Every base family has a <name>_rev partner generating the exact
reversal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .text import Text, concat, is_lyndon, occurrences, reverse

T55 = "abaaababaabababbabaaababaaababaaababaabababaabababababa"

BASE_FAMILIES = (
    "u_k", "T_p", "w_sigma", "fib", "central", "fib_plus", "c_fib", "unary_plus", "t55",
)
FAMILIES = BASE_FAMILIES + tuple(f + "_rev" for f in BASE_FAMILIES)
# spell the documented reversed ids explicitly (c_fib_rev etc. are primary names)
REV_PARTNER = {f: f + "_rev" for f in BASE_FAMILIES}
REV_PARTNER.update({v: k for k, v in REV_PARTNER.items()})

PARAMLESS_FAMILIES = ("t55", "t55_rev")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    param: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    @property
    def base_family(self) -> str:
        return self.family[:-4] if self.family.endswith("_rev") else self.family

    @property
    def reversed_orientation(self) -> bool:
        return self.family.endswith("_rev")


@dataclass(frozen=True)
class Prediction:
    """A closed-form value for (family, measure), tagged with its formula."""

    measure: str
    value: object  # int | Fraction | Text
    formula: str


# ---------------------------------------------------------------------------
# generators

def _u_k_names(k: int) -> dict[int, str]:
    names = {2 * k: "a", 2 * k + 1: "b"}
    for i in range(1, k + 1):
        names[2 * (i - 1)] = f"#_{i}"
        names[2 * i - 1] = f"&_{i}"
    return names


def _gen_u_k(k: int) -> Text:
    if k < 1:
        raise ValueError(f"u_k parameter must be >= 1, got {k}")
    a, b = 2 * k, 2 * k + 1
    symbols: list[int] = []
    for i in range(1, k + 1):
        symbols += [b, a, 2 * (i - 1), a, 2 * i - 1]
    return Text(tuple(symbols), _u_k_names(k))


def _t_p_names(p: int) -> dict[int, str]:
    names = {0: "x"}
    for i in range(1, p + 1):
        names[i] = f"a_{i}"
        names[p + i] = f"b_{i}"
    return names


def a_staircase(p: int) -> Text:
    """A_p ... A_1 where A_i = a_i a_(i-1) ... a_1."""
    if p < 1:
        raise ValueError(f"staircase order must be >= 1, got {p}")
    symbols: list[int] = []
    for i in range(p, 0, -1):
        symbols += list(range(i, 0, -1))
    return Text(tuple(symbols), _t_p_names(p))


def b_staircase(p: int) -> Text:
    """B_1 ... B_p where B_i = b_i b_(i-1) ... b_1."""
    if p < 1:
        raise ValueError(f"staircase order must be >= 1, got {p}")
    symbols: list[int] = []
    for i in range(1, p + 1):
        symbols += [p + j for j in range(i, 0, -1)]
    return Text(tuple(symbols), _t_p_names(p))


def _gen_t_p(p: int) -> Text:
    if p < 1:
        raise ValueError(f"T_p parameter must be >= 1, got {p}")
    alpha = a_staircase(p).symbols
    beta = b_staircase(p).symbols
    m = p * (p + 1) // 2
    symbols: list[int] = []
    for j in range(1, m):
        symbols += list(alpha[m - j:]) + [0] + list(beta[: j + 1])
    symbols += list(alpha) + [0] + list(beta)
    return Text(tuple(symbols), _t_p_names(p))


def _gen_w_sigma(sigma: int) -> Text:
    if sigma < 2 or sigma % 2:
        raise ValueError(f"w_sigma parameter sigma must be even and >= 2, got {sigma}")
    names = {i - 1: f"a_{i}" for i in range(1, sigma + 1)}
    symbols: list[int] = []
    for i in range(1, sigma):
        symbols += [i - 1, i]
    symbols += list(range(sigma))
    return Text(tuple(symbols), names)


_FIB_NAMES = {0: "a", 1: "b"}
_fib_cache: dict[int, tuple[int, ...]] = {1: (1,), 2: (0,)}


def fibonacci_word(k: int) -> Text:
    """F_1 = b, F_2 = a, F_k = F_(k-1) F_(k-2)."""
    if k < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {k}")
    if k not in _fib_cache:
        top = max(_fib_cache)
        for i in range(top + 1, k + 1):
            _fib_cache[i] = _fib_cache[i - 1] + _fib_cache[i - 2]
    return Text(_fib_cache[k], _FIB_NAMES)


def central_word(k: int) -> Text:
    """C_k: the k-th Fibonacci word minus its last two symbols."""
    if k < 3:
        raise ValueError(f"central words need index >= 3, got {k}")
    return Text(fibonacci_word(k).symbols[:-2], _FIB_NAMES)


def _gen_fib_plus(k: int) -> Text:
    if k < 2:
        raise ValueError(f"fib_plus index must be >= 2, got {k}")
    return Text(fibonacci_word(k).symbols + (0,), _FIB_NAMES)


_C_FIB_NAMES = {0: "a", 1: "b", 2: "c"}


def _gen_c_fib(k: int) -> Text:
    if k < 3:
        raise ValueError(f"c_fib index must be >= 3, got {k}")
    return Text((2,) + fibonacci_word(k).symbols, _C_FIB_NAMES)


def _gen_unary_plus(n: int) -> Text:
    if n < 2:
        raise ValueError(f"unary_plus length must be >= 2, got {n}")
    return Text((0,) + (1,) * (n - 1), {0: "a", 1: "b"})


def _gen_t55(_param: None = None) -> Text:
    return Text.from_str(T55)


_GENERATORS = {
    "u_k": _gen_u_k,
    "T_p": _gen_t_p,
    "w_sigma": _gen_w_sigma,
    "fib": fibonacci_word,
    "central": central_word,
    "fib_plus": _gen_fib_plus,
    "c_fib": _gen_c_fib,
    "unary_plus": _gen_unary_plus,
}

_MIN_PARAM = {
    "u_k": 1, "T_p": 1, "w_sigma": 2, "fib": 1, "central": 3,
    "fib_plus": 2, "c_fib": 3, "unary_plus": 2,
}


def validate_param(spec: FamilySpec) -> None:
    """Raise ValueError unless the parameter satisfies the family invariants."""
    base = spec.base_family
    if base == "t55":
        if spec.param is not None:
            raise ValueError("t55 takes no parameter")
        return
    if spec.param is None:
        raise ValueError(f"family {spec.family} requires a parameter")
    if spec.param < _MIN_PARAM[base]:
        raise ValueError(
            f"{spec.family} parameter must be >= {_MIN_PARAM[base]}, got {spec.param}"
        )
    if base == "w_sigma" and spec.param % 2:
        raise ValueError(f"w_sigma parameter sigma must be even, got {spec.param}")


def generate(spec: FamilySpec) -> Text:
    """Construct the family string; reversed ids reverse the base string."""
    validate_param(spec)
    base = spec.base_family
    w = _gen_t55() if base == "t55" else _GENERATORS[base](spec.param)
    return reverse(w) if spec.reversed_orientation else w


# ---------------------------------------------------------------------------
# closed-form predictions

def _always(_p: int) -> bool:
    return True


# family -> measure -> (gate, value function, formula)
_PREDICTORS: dict[str, dict[str, tuple]] = {
    "u_k": {
        "r": (_always, lambda k: 3 * k + 1, "r = 3k + 1"),
        "r_dollar": (_always, lambda k: 3 * k + 2, "r_dollar = 3k + 2"),
        "r_b": (_always, lambda k: 3 * k + 2, "r_b = 3k + 2"),
    },
    "u_k_rev": {
        "r": (_always, lambda k: 4 * k + 1, "r = 4k + 1"),
        "r_dollar": (_always, lambda k: 4 * k + 2, "r_dollar = 4k + 2"),
        "r_b": (_always, lambda k: 4 * k + 1, "r_b = 4k + 1"),
    },
    "T_p": {
        "z": (_always, lambda p: (3 * p * p + 3 * p) // 2, "z = 3p^2/2 + 3p/2"),
        "z_no": (_always, lambda p: (3 * p * p + 3 * p) // 2, "z_no = 3p^2/2 + 3p/2"),
    },
    # The reversed staircase family parses as one phrase per reversed block
    # plus the 4p-1 phrases of the leading block: (m_p - 1) + (4p - 1).
    "T_p_rev": {
        "z": (lambda p: p >= 2, lambda p: (p * p + 9 * p) // 2 - 2, "z = p^2/2 + 9p/2 - 2"),
        "z_no": (lambda p: p >= 2, lambda p: (p * p + 9 * p) // 2 - 2, "z_no = p^2/2 + 9p/2 - 2"),
    },
    "w_sigma": {
        m: (_always, lambda s: 5 * s // 2 - 2, f"{m} = 2*sigma + sigma/2 - 2")
        for m in ("z", "z_no", "z_e", "z_end", "v")
    },
    "w_sigma_rev": {
        m: (_always, lambda s: 2 * s - 1, f"{m} = 2*sigma - 1")
        for m in ("z", "z_no", "z_e", "z_end", "v")
    },
    "c_fib_rev": {
        "v": (lambda k: k >= 9 and k % 2 == 1, lambda k: 6, "v = 6 (odd k >= 9)"),
    },
    "fib_plus": {
        "r": (lambda k: k % 2 == 0, lambda k: 4, "r = 4 (even k)"),
    },
    "unary_plus": {
        "e": (_always, lambda n: n, "e = n"),
    },
    "unary_plus_rev": {
        "e": (_always, lambda n: 2 * (n - 1), "e = 2(n - 1)"),
    },
    "t55": {
        "z": (lambda _p: True, lambda _p: 14, "z = 14"),
    },
    "t55_rev": {
        "z": (lambda _p: True, lambda _p: 6, "z = 6"),
    },
}


def predict(spec: FamilySpec, measure: str) -> Prediction | None:
    """Closed-form value of a measure on this family member, if known."""
    validate_param(spec)
    table = _PREDICTORS.get(spec.family)
    if not table or measure not in table:
        return None
    gate, value, formula = table[measure]
    param = spec.param if spec.param is not None else 0
    if not gate(param):
        return None
    return Prediction(measure, value(param), formula)


def predictions(spec: FamilySpec) -> tuple[Prediction, ...]:
    table = _PREDICTORS.get(spec.family, {})
    out = []
    for measure in sorted(table):
        p = predict(spec, measure)
        if p is not None:
            out.append(p)
    return tuple(out)


# ---------------------------------------------------------------------------
# closed-form transform strings for u_k / u_k_rev

def predict_transform(spec: FamilySpec, variant: str) -> Text:
    """Exact expected BWT ("plain") or BBWT ("bijective") string."""
    if spec.family not in ("u_k", "u_k_rev"):
        raise ValueError(f"no closed-form transform for family {spec.family}")
    if variant not in ("plain", "bijective"):
        raise ValueError(f"unknown transform variant {variant!r}")
    k = spec.param
    if k is None or k < 1:
        raise ValueError(f"u_k parameter must be >= 1, got {k}")
    a, b = 2 * k, 2 * k + 1
    hsh = [2 * (i - 1) for i in range(1, k + 1)]
    amp = [2 * i - 1 for i in range(1, k + 1)]
    if spec.family == "u_k":
        if variant == "plain":
            symbols = [a] * (2 * k)
            for i in range(k):
                symbols += [b, hsh[i]]
            symbols += [amp[-1]] + amp[:-1]
        else:
            symbols = [amp[-1]] + [a] * (2 * k - 1) + [hsh[0]]
            for i in range(1, k):
                symbols += [b, hsh[i]]
            symbols += [a] + amp[:-1] + [b]
    else:
        if variant == "plain":
            symbols = [a, b] * k + amp + hsh[1:] + [hsh[0]] + [a] * k
        else:
            symbols = [b, a] * k + amp + hsh + [a] * k
    return Text(tuple(symbols), _u_k_names(k))


def transform_predictions(spec: FamilySpec) -> tuple[tuple[str, Text], ...]:
    """(variant, expected text) pairs available for this family member."""
    if spec.family not in ("u_k", "u_k_rev"):
        return ()
    return tuple((v, predict_transform(spec, v)) for v in ("plain", "bijective"))


# ---------------------------------------------------------------------------
# Fibonacci word property suite

@dataclass(frozen=True)
class FibPropertyReport:
    """Direct evaluation of the five structural central-word properties."""

    palindrome: bool            # C_k reads the same both ways
    telescoped_product: bool    # C_k = F_(k-2) F_(k-3) ... F_3 F_2
    bracket_lyndon: bool        # a C_k b is a Lyndon word
    triple_occurrence: bool     # F_(k-2) occurs in F_k exactly at 1, f_(k-2)+1, f_(k-1)+1
    parity_suffix: bool         # F_k = C_k * (ab|ba) and F_(k-2)F_(k-1) = C_k * (ba|ab)

    def all_hold(self) -> bool:
        return all(
            (self.palindrome, self.telescoped_product, self.bracket_lyndon,
             self.triple_occurrence, self.parity_suffix)
        )


def fib_property_check(k: int) -> FibPropertyReport:
    if k < 6:
        raise ValueError(f"property suite needs k >= 6, got {k}")
    f_k = fibonacci_word(k)
    f_k1 = fibonacci_word(k - 1)
    f_k2 = fibonacci_word(k - 2)
    c_k = central_word(k)
    a = Text((0,), _FIB_NAMES)
    b = Text((1,), _FIB_NAMES)
    ab = Text((0, 1), _FIB_NAMES)
    ba = Text((1, 0), _FIB_NAMES)

    palindrome = c_k == reverse(c_k)
    telescoped = c_k == concat(*(fibonacci_word(i) for i in range(k - 2, 1, -1)))
    bracket = is_lyndon(concat(a, c_k, b))
    expected_positions = [1, len(f_k2) + 1, len(f_k1) + 1]
    triple = occurrences(f_k2, f_k) == expected_positions
    tail, other = (ab, ba) if k % 2 else (ba, ab)
    parity = f_k == concat(c_k, tail) and concat(f_k2, f_k1) == concat(c_k, other)
    return FibPropertyReport(palindrome, telescoped, bracket, triple, parity)
