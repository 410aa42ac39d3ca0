"""Canonical Boolean function engine.

Functions live in a :class:`BoolSpace`, which stores them as reduced
ordered binary decision diagrams with hash-consed nodes.  Within one
space two functions are pointwise equal exactly when they carry the
same node handle, so every algebraic identity in this package reduces
to an ``==`` check.
"""

from __future__ import annotations

import threading
from typing import Optional, Sequence, Union

#: Default ceiling on the number of points an enumeration may visit.
DEFAULT_ENUM_CAP = 1 << 24

_FALSE = 0
_TRUE = 1


class EnumerationCapError(ValueError):
    """An on-set enumeration would exceed the configured point cap."""


class BoolSpace:
    """Manages all Boolean functions over one ordered variable set.

    The variable order is fixed at construction, either as a count
    (names default to x1..xn) or as an explicit name sequence.  Node
    creation is serialized behind a lock, so a space may be shared by
    several threads; the functions themselves are immutable.
    """

    def __init__(self, variables: Union[int, Sequence[str]]):
        if isinstance(variables, int):
            if variables < 0:
                raise ValueError("variable count must be >= 0")
            names = tuple(f"x{i + 1}" for i in range(variables))
        else:
            names = tuple(variables)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable name")
        self._names = names
        self._name_index = {name: i for i, name in enumerate(names)}
        # handles 0 and 1 are the constants; node k lives at _nodes[k - 2]
        self._nodes: list[tuple[int, int, int]] = []
        self._unique: dict[tuple[int, int, int], int] = {}
        self._ite_cache: dict[tuple[int, int, int], int] = {}
        self._lock = threading.RLock()

    @property
    def var_count(self) -> int:
        return len(self._names)

    @property
    def var_names(self) -> tuple[str, ...]:
        return self._names

    # -- function constructors ----------------------------------------

    def const(self, value) -> "BoolFunc":
        """The constant-0 or constant-1 function."""
        return BoolFunc(self, _TRUE if value else _FALSE)

    @property
    def true(self) -> "BoolFunc":
        return BoolFunc(self, _TRUE)

    @property
    def false(self) -> "BoolFunc":
        return BoolFunc(self, _FALSE)

    def var(self, index: int) -> "BoolFunc":
        """The projection function of the variable at ``index``."""
        if not 0 <= index < len(self._names):
            raise ValueError(f"variable index {index} out of range")
        with self._lock:
            return BoolFunc(self, self._mk(index, _FALSE, _TRUE))

    def named(self, name: str) -> "BoolFunc":
        """Like :meth:`var`, addressed by variable name."""
        try:
            index = self._name_index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None
        return self.var(index)

    def identity_subst(self) -> list["BoolFunc"]:
        """The substitution mapping every variable to itself."""
        return [self.var(i) for i in range(len(self._names))]

    def ite(self, cond: "BoolFunc", when_true: "BoolFunc",
            when_false: "BoolFunc") -> "BoolFunc":
        """Pointwise if-then-else of three functions."""
        self._check(cond)
        self._check(when_true)
        self._check(when_false)
        with self._lock:
            return BoolFunc(self, self._ite(cond._handle, when_true._handle,
                                            when_false._handle))

    # -- internals ------------------------------------------------------

    def _check(self, func) -> None:
        if not isinstance(func, BoolFunc):
            raise TypeError(f"expected BoolFunc, got {type(func).__name__}")
        if func.space is not self:
            raise ValueError("functions belong to different spaces")

    def _level(self, handle: int) -> int:
        # constants sort below every variable level
        return self._nodes[handle - 2][0] if handle >= 2 else len(self._names)

    def _mk(self, level: int, lo: int, hi: int) -> int:
        if lo == hi:
            return lo
        key = (level, lo, hi)
        handle = self._unique.get(key)
        if handle is None:
            self._nodes.append(key)
            handle = len(self._nodes) + 1
            self._unique[key] = handle
        return handle

    def _branches(self, handle: int, level: int) -> tuple[int, int]:
        if handle >= 2:
            node_level, lo, hi = self._nodes[handle - 2]
            if node_level == level:
                return lo, hi
        return handle, handle

    def _ite(self, cond: int, yes: int, no: int) -> int:
        if cond == _TRUE:
            return yes
        if cond == _FALSE:
            return no
        if yes == no:
            return yes
        if yes == _TRUE and no == _FALSE:
            return cond
        key = (cond, yes, no)
        hit = self._ite_cache.get(key)
        if hit is not None:
            return hit
        level = min(self._level(cond), self._level(yes), self._level(no))
        c_lo, c_hi = self._branches(cond, level)
        y_lo, y_hi = self._branches(yes, level)
        n_lo, n_hi = self._branches(no, level)
        result = self._mk(level,
                          self._ite(c_lo, y_lo, n_lo),
                          self._ite(c_hi, y_hi, n_hi))
        self._ite_cache[key] = result
        return result

    def __repr__(self) -> str:
        return f"BoolSpace({list(self._names)!r})"


class BoolFunc:
    """One Boolean function, immutable and canonical within its space.

    Supports ``&``, ``|``, ``^``, ``~`` for the pointwise connectives,
    ``<=`` for implication, and calling with a point for evaluation.
    Instances are created through a :class:`BoolSpace`, never directly.
    """

    __slots__ = ("space", "_handle")

    def __init__(self, space: BoolSpace, handle: int):
        self.space = space
        self._handle = handle

    # -- algebra ---------------------------------------------------------

    def __and__(self, other: "BoolFunc") -> "BoolFunc":
        space = self.space
        space._check(other)
        with space._lock:
            return BoolFunc(space, space._ite(self._handle, other._handle, _FALSE))

    def __or__(self, other: "BoolFunc") -> "BoolFunc":
        space = self.space
        space._check(other)
        with space._lock:
            return BoolFunc(space, space._ite(self._handle, _TRUE, other._handle))

    def __xor__(self, other: "BoolFunc") -> "BoolFunc":
        space = self.space
        space._check(other)
        with space._lock:
            flipped = space._ite(other._handle, _FALSE, _TRUE)
            return BoolFunc(space, space._ite(self._handle, flipped, other._handle))

    def __invert__(self) -> "BoolFunc":
        space = self.space
        with space._lock:
            return BoolFunc(space, space._ite(self._handle, _FALSE, _TRUE))

    def implies(self, other: "BoolFunc") -> bool:
        """True when this function is pointwise at most ``other``."""
        space = self.space
        space._check(other)
        with space._lock:
            flipped = space._ite(other._handle, _FALSE, _TRUE)
            return space._ite(self._handle, flipped, _FALSE) == _FALSE

    def __le__(self, other: "BoolFunc") -> bool:
        return self.implies(other)

    def __ge__(self, other: "BoolFunc") -> bool:
        self.space._check(other)
        return other.implies(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoolFunc):
            return NotImplemented
        return self.space is other.space and self._handle == other._handle

    def __hash__(self) -> int:
        return hash((id(self.space), self._handle))

    def __bool__(self):
        raise TypeError("truth value of a BoolFunc is ambiguous; "
                        "use is_sat() or an explicit comparison")

    # -- evaluation and structure -----------------------------------------

    def __call__(self, point: Sequence[int]) -> int:
        """Evaluate at a point (sequence of n bits)."""
        if len(point) != self.space.var_count:
            raise ValueError("point length does not match variable count")
        nodes = self.space._nodes
        handle = self._handle
        while handle >= 2:
            level, lo, hi = nodes[handle - 2]
            handle = hi if point[level] else lo
        return handle

    def is_sat(self) -> bool:
        """True unless the function is constant 0."""
        return self._handle != _FALSE

    def any_on_point(self) -> Optional[tuple[int, ...]]:
        """Lexicographically smallest point mapped to 1, or None if none."""
        if self._handle == _FALSE:
            return None
        nodes = self.space._nodes
        point = [0] * self.space.var_count
        handle = self._handle
        while handle >= 2:
            level, lo, hi = nodes[handle - 2]
            if lo == _FALSE:
                point[level] = 1
                handle = hi
            else:
                handle = lo
        return tuple(point)

    def any_off_point(self) -> Optional[tuple[int, ...]]:
        """Lexicographically smallest point mapped to 0, or None if none."""
        if self._handle == _TRUE:
            return None
        nodes = self.space._nodes
        point = [0] * self.space.var_count
        handle = self._handle
        while handle >= 2:
            level, lo, hi = nodes[handle - 2]
            if lo == _TRUE:
                point[level] = 1
                handle = hi
            else:
                handle = lo
        return tuple(point)

    def support(self) -> frozenset[int]:
        """Indices of the variables the function actually depends on."""
        nodes = self.space._nodes
        seen: set[int] = set()
        levels: set[int] = set()
        stack = [self._handle]
        while stack:
            handle = stack.pop()
            if handle < 2 or handle in seen:
                continue
            seen.add(handle)
            level, lo, hi = nodes[handle - 2]
            levels.add(level)
            stack.append(lo)
            stack.append(hi)
        return frozenset(levels)

    def node_count(self) -> int:
        """Number of decision nodes in the representation (constants: 0)."""
        nodes = self.space._nodes
        seen: set[int] = set()
        stack = [self._handle]
        while stack:
            handle = stack.pop()
            if handle < 2 or handle in seen:
                continue
            seen.add(handle)
            _, lo, hi = nodes[handle - 2]
            stack.append(lo)
            stack.append(hi)
        return len(seen)

    def enumerate_on_set(self, cap: int = DEFAULT_ENUM_CAP) -> list[tuple[int, ...]]:
        """All points mapped to 1, in lexicographic order.

        Raises EnumerationCapError when the space holds more than
        ``cap`` points, since the result may need to list all of them.
        """
        n = self.space.var_count
        if (1 << n) > cap:
            raise EnumerationCapError(
                f"enumerating 2^{n} points exceeds the cap of {cap}")
        nodes = self.space._nodes
        out: list[tuple[int, ...]] = []
        point = [0] * n

        def walk(handle: int, level: int) -> None:
            if handle == _FALSE:
                return
            if level == n:
                out.append(tuple(point))
                return
            node_level = nodes[handle - 2][0] if handle >= 2 else n
            if node_level > level:
                point[level] = 0
                walk(handle, level + 1)
                point[level] = 1
                walk(handle, level + 1)
            else:
                _, lo, hi = nodes[handle - 2]
                point[level] = 0
                walk(lo, level + 1)
                point[level] = 1
                walk(hi, level + 1)
            point[level] = 0

        walk(self._handle, 0)
        return out

    def compose(self, subst: Sequence["BoolFunc"]) -> "BoolFunc":
        """Substitute one function per variable and renormalize.

        Entry i replaces variable i; the result is the canonical form
        of f(subst[0](x), ..., subst[n-1](x)).
        """
        space = self.space
        if len(subst) != space.var_count:
            raise ValueError("substitution length does not match variable count")
        for entry in subst:
            space._check(entry)
        with space._lock:
            memo: dict[int, int] = {}

            def walk(handle: int) -> int:
                if handle < 2:
                    return handle
                done = memo.get(handle)
                if done is not None:
                    return done
                level, lo, hi = space._nodes[handle - 2]
                result = space._ite(subst[level]._handle, walk(hi), walk(lo))
                memo[handle] = result
                return result

            return BoolFunc(space, walk(self._handle))

    def format_expr(self, max_terms: Optional[int] = None) -> str:
        """Sum-of-products rendering built from the 1-paths.

        Intended for diagnostics; the term count can grow exponentially
        with the variable count, so pass ``max_terms`` to truncate.
        """
        if self._handle == _FALSE:
            return "0"
        if self._handle == _TRUE:
            return "1"
        names = self.space._names
        nodes = self.space._nodes
        terms: list[str] = []
        cube: list[str] = []
        truncated = False

        def walk(handle: int) -> None:
            nonlocal truncated
            if truncated or handle == _FALSE:
                return
            if handle == _TRUE:
                if max_terms is not None and len(terms) >= max_terms:
                    truncated = True
                    return
                terms.append("&".join(cube) if cube else "1")
                return
            level, lo, hi = nodes[handle - 2]
            cube.append("~" + names[level])
            walk(lo)
            cube.pop()
            cube.append(names[level])
            walk(hi)
            cube.pop()

        walk(self._handle)
        rendered = " | ".join(terms)
        return rendered + " | ..." if truncated else rendered

    def __repr__(self) -> str:
        return f"BoolFunc({self.format_expr(max_terms=4)})"
