"""Boolean functions in algebraic normal form, terms and cofactors.

Variables are 1-based integers.  Internally a monomial is an integer bitmask
(bit ``i - 1`` set for variable ``i``, ``0`` for the constant monomial) and a
term is a pair of masks: the bound variables and the values they are bound to.
All values are immutable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "AnfPoly",
    "Term",
    "OnSet",
    "CONTRADICTION",
    "AnfParseError",
    "IncompleteAssignmentError",
    "evaluate",
    "support",
    "cofactor",
    "term_product",
    "on_set",
    "parse_anf",
    "serialize_anf",
    "parse_term",
    "serialize_term",
    "mask_to_vars",
    "vars_to_mask",
]


class AnfParseError(ValueError):
    """Malformed ANF or term text.  ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class IncompleteAssignmentError(ValueError):
    pass


def vars_to_mask(variables: Iterable[int]) -> int:
    mask = 0
    for v in variables:
        if v < 1:
            raise ValueError(f"variable index must be >= 1, got {v}")
        mask |= 1 << (v - 1)
    return mask


def mask_to_vars(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _monomial_key(mask: int) -> tuple[int, tuple[int, ...]]:
    vs = mask_to_vars(mask)
    return (len(vs), vs)


class AnfPoly:
    """XOR of AND-monomials over GF(2).

    ``AnfPoly([[1], [2], [2, 3]])`` is x1 + x2 + x2*x3.  An empty monomial (or
    the bare integer ``1`` in the paper-style input) is the constant term.
    Repeated monomials cancel in pairs.
    """

    __slots__ = ("_masks", "num_vars", "_hash")

    def __init__(self, monomials: Iterable[Iterable[int] | int] = (), num_vars: int | None = None):
        acc: set[int] = set()
        for m in monomials:
            if isinstance(m, int):
                if m != 1:
                    raise ValueError(f"bare integer monomial must be 1 (constant), got {m}")
                mask = 0
            else:
                vs = list(m)
                if len(set(vs)) != len(vs):
                    raise ValueError(f"duplicate variable in monomial {vs}")
                mask = vars_to_mask(vs)
            acc ^= {mask}
        self._init(frozenset(acc), num_vars)

    def _init(self, masks: frozenset[int], num_vars: int | None) -> None:
        top = max(masks, default=0).bit_length()
        if num_vars is None:
            num_vars = max(top, 1)
        elif top > num_vars:
            raise ValueError(f"variable x{top} exceeds num_vars={num_vars}")
        self._masks = masks
        self.num_vars = num_vars
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Iterable[int], num_vars: int | None = None) -> AnfPoly:
        """Build from monomial bitmasks; masks are taken as a set (no cancellation)."""
        obj = cls.__new__(cls)
        obj._init(frozenset(masks), num_vars)
        return obj

    @classmethod
    def zero(cls, num_vars: int = 1) -> AnfPoly:
        return cls.from_masks((), num_vars)

    @classmethod
    def one(cls, num_vars: int = 1) -> AnfPoly:
        return cls.from_masks((0,), num_vars)

    @property
    def masks(self) -> frozenset[int]:
        return self._masks

    @property
    def monomials(self) -> tuple[tuple[int, ...], ...]:
        """Monomials as variable tuples, by degree then lexicographically."""
        return tuple(mask_to_vars(m) for m in sorted(self._masks, key=_monomial_key))

    @property
    def support_mask(self) -> int:
        out = 0
        for m in self._masks:
            out |= m
        return out

    def is_zero(self) -> bool:
        return not self._masks

    def is_one(self) -> bool:
        return self._masks == {0}

    def is_constant(self) -> bool:
        return self.support_mask == 0

    def __xor__(self, other: AnfPoly) -> AnfPoly:
        return AnfPoly.from_masks(self._masks ^ other._masks, max(self.num_vars, other.num_vars))

    __add__ = __xor__

    def __len__(self) -> int:
        return len(self._masks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AnfPoly):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._masks)
        return self._hash

    def __repr__(self) -> str:
        return f"AnfPoly({serialize_anf(self)}, num_vars={self.num_vars})"

    def __str__(self) -> str:
        return serialize_anf(self)

    def __reduce__(self):
        return (AnfPoly.from_masks, (self._masks, self.num_vars))


class _Contradiction:
    """Result of multiplying two terms that bind a variable to opposite values."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "CONTRADICTION"

    def __bool__(self) -> bool:
        return False

    def __reduce__(self):
        return (_Contradiction, ())


CONTRADICTION = _Contradiction()


@dataclass(frozen=True, slots=True)
class Term:
    """A conjunction of literals, i.e. a partial assignment.

    ``care`` has a bit for every bound variable, ``value`` the bound values
    (always a submask of ``care``).  ``Term()`` is the tautology.
    """

    care: int = 0
    value: int = 0

    def __post_init__(self):
        if self.value & ~self.care:
            raise ValueError("term value bits outside its care mask")

    @classmethod
    def from_literals(cls, literals: Iterable[int]) -> Term:
        """``Term.from_literals([1, 2, -3])`` is x1 x2 x3'."""
        care = value = 0
        for lit in literals:
            if lit == 0:
                raise ValueError("literal 0 is not a variable")
            bit = 1 << (abs(lit) - 1)
            if care & bit:
                raise ValueError(f"variable {abs(lit)} bound twice")
            care |= bit
            if lit > 0:
                value |= bit
        return cls(care, value)

    @classmethod
    def from_dict(cls, bindings: Mapping[int, int]) -> Term:
        return cls.from_literals(v if b else -v for v, b in bindings.items())

    @property
    def literals(self) -> tuple[int, ...]:
        return tuple(v if self.value >> (v - 1) & 1 else -v for v in mask_to_vars(self.care))

    @property
    def variables(self) -> tuple[int, ...]:
        return mask_to_vars(self.care)

    def as_dict(self) -> dict[int, int]:
        return {abs(lit): int(lit > 0) for lit in self.literals}

    def __len__(self) -> int:
        return self.care.bit_count()

    def __bool__(self) -> bool:
        # the tautology has no literals but is still a term, not CONTRADICTION
        return True

    def is_tautology(self) -> bool:
        return self.care == 0

    def evaluate(self, assignment: Mapping[int, int] | Sequence[int]) -> int:
        """1 when the total assignment lies under this term."""
        get = _getter(assignment)
        for lit in self.literals:
            if get(abs(lit)) != (lit > 0):
                return 0
        return 1

    def sort_key(self) -> tuple[int, ...]:
        return self.literals

    def __str__(self) -> str:
        return serialize_term(self)

    def __repr__(self) -> str:
        return f"Term{serialize_term(self)}"


@dataclass(frozen=True)
class OnSet:
    variables: tuple[int, ...]
    terms: tuple[Term, ...]

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)


def _getter(assignment: Mapping[int, int] | Sequence[int]):
    if isinstance(assignment, Mapping):
        def get(v: int) -> int:
            try:
                return int(assignment[v])
            except KeyError:
                raise IncompleteAssignmentError(f"variable {v} is not assigned") from None
    else:
        def get(v: int) -> int:
            if v > len(assignment):
                raise IncompleteAssignmentError(f"variable {v} is not assigned")
            return int(assignment[v - 1])
    return get


def evaluate(f: AnfPoly, assignment: Mapping[int, int] | Sequence[int]) -> int:
    """Value of ``f`` at a total assignment.

    ``assignment`` is either a mapping ``var -> bit`` or a bit sequence whose
    first entry is x1.
    """
    get = _getter(assignment)
    point = 0
    for v in mask_to_vars(f.support_mask):
        if get(v):
            point |= 1 << (v - 1)
    acc = 0
    for m in f.masks:
        if m & point == m:
            acc ^= 1
    return acc


def support(f: AnfPoly) -> tuple[int, ...]:
    return mask_to_vars(f.support_mask)


def cofactor(f: AnfPoly, t: Term) -> AnfPoly:
    """Substitute the partial assignment ``t`` into ``f`` (the ratio f/t).

    Bindings of variables that ``f`` does not mention are ignored.
    """
    care = t.care & f.support_mask
    if not care:
        return f
    zeros = care & ~t.value
    acc: set[int] = set()
    keep = ~care
    for m in f.masks:
        if m & zeros:
            continue
        r = m & keep
        if r in acc:
            acc.remove(r)
        else:
            acc.add(r)
    return AnfPoly.from_masks(acc, f.num_vars)


def term_product(t1: Term, t2: Term) -> Term | _Contradiction:
    common = t1.care & t2.care
    if (t1.value ^ t2.value) & common:
        return CONTRADICTION
    return Term(t1.care | t2.care, t1.value | t2.value)


def on_set(variables: Sequence[int]) -> OnSet:
    """Orthonormal terms v1, v1'v2, ..., v1'...v(k-1)'vk, v1'...vk'."""
    variables = tuple(variables)
    if not variables:
        raise ValueError("on_set needs at least one variable")
    if len(set(variables)) != len(variables):
        raise ValueError(f"duplicate variable in {variables}")
    terms = []
    care = 0
    for v in variables:
        bit = 1 << (v - 1)
        terms.append(Term(care | bit, bit))
        care |= bit
    terms.append(Term(care, 0))
    return OnSet(variables, tuple(terms))


# ---- text forms ---------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise AnfParseError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def integer(self) -> tuple[int, int]:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start:self.pos]
        if token in ("", "+", "-"):
            raise AnfParseError("expected an integer", start)
        return int(token), start

    def end(self) -> None:
        if self.peek():
            raise AnfParseError("trailing characters", self.pos)


def _index_list(sc: _Scanner, close: str) -> list[tuple[int, int]]:
    items: list[tuple[int, int]] = []
    if sc.peek() == close:
        sc.pos += 1
        return items
    while True:
        items.append(sc.integer())
        if sc.peek() == ",":
            sc.pos += 1
            continue
        sc.expect(close)
        return items


def parse_anf(text: str, num_vars: int | None = None) -> AnfPoly:
    """Parse the array-of-arrays notation, e.g. ``[1,[1],[3],[1,2]]``.

    A bare ``1`` or an empty subarray is the constant term; ``[]`` is the
    zero function.
    """
    sc = _Scanner(text)
    sc.expect("[")
    masks: set[int] = set()
    if sc.peek() == "]":
        sc.pos += 1
    else:
        while True:
            if sc.peek() == "[":
                sc.pos += 1
                mask = 0
                for idx, at in _index_list(sc, "]"):
                    if idx < 1:
                        raise AnfParseError(f"variable index must be positive, got {idx}", at)
                    bit = 1 << (idx - 1)
                    if mask & bit:
                        raise AnfParseError(f"variable {idx} repeated in monomial", at)
                    mask |= bit
            else:
                value, at = sc.integer()
                if value != 1:
                    raise AnfParseError(f"only the constant 1 may appear outside a subarray, got {value}", at)
                mask = 0
            masks ^= {mask}
            if sc.peek() == ",":
                sc.pos += 1
                continue
            sc.expect("]")
            break
    sc.end()
    try:
        return AnfPoly.from_masks(masks, num_vars)
    except ValueError as exc:
        raise AnfParseError(str(exc), 0) from None


def serialize_anf(f: AnfPoly) -> str:
    parts = []
    for m in sorted(f.masks, key=_monomial_key):
        if m == 0:
            parts.append("1")
        else:
            parts.append("[" + ",".join(map(str, mask_to_vars(m))) + "]")
    return "[" + ",".join(parts) + "]"


def parse_term(text: str) -> Term:
    """Parse a signed tuple such as ``(1,2,-3,4)``; ``()`` is the tautology."""
    sc = _Scanner(text)
    sc.expect("(")
    care = value = 0
    for lit, at in _index_list(sc, ")"):
        if lit == 0:
            raise AnfParseError("literal 0 is not a variable", at)
        bit = 1 << (abs(lit) - 1)
        if care & bit:
            raise AnfParseError(f"variable {abs(lit)} repeated in term", at)
        care |= bit
        if lit > 0:
            value |= bit
    sc.end()
    return Term(care, value)


def serialize_term(t: Term) -> str:
    return "(" + ",".join(map(str, t.literals)) + ")"


def variable_frequencies(f: AnfPoly) -> Counter:
    """Number of monomials each variable occurs in."""
    counts: Counter = Counter()
    for m in f.masks:
        counts.update(mask_to_vars(m))
    return counts
