"""Symbols of the exact kernel.

Four kinds of symbols appear in expressions:

* variables     -- independent variables like ``x`` or ``t``
* parameters    -- free constants like ``a`` or an undetermined class
                   parameter; they differentiate to zero
* functions     -- differential indeterminates: an opaque analytic function
                   ``f`` of one variable together with its derivative tower
                   ``f'``, ``f''``, ...  The derivation rule is
                   d(f^(k))/dx = f^(k+1).  ``exp(x)`` is the special
                   self-derivative member of this family.
* square roots  -- kernel-internal algebraic symbols ``w = sqrt(g)`` for a
                   polynomial radicand ``g``; powers reduce via w^2 -> g and
                   dw/dx = g' * w / (2*g).

The fixed symbol order used by the canonical monomial order is
variables < functions < square roots < parameters, then by name.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class SymbolKind(enum.IntEnum):
    VARIABLE = 0
    FUNCTION = 1
    SQRT = 2
    PARAMETER = 3


@dataclass(frozen=True)
class Symbol:
    name: str
    kind: SymbolKind
    # function symbols: family name, derivative order, argument variable name
    base: str = ""
    order: int = 0
    arg: str = ""
    selfder: bool = False  # exp-style: derivative is the symbol itself
    # sqrt symbols: radicand (a Poly; typed loosely to avoid an import cycle)
    radicand: object = None
    depth: int = 0  # nesting depth of sqrt symbols, 0 for everything else
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "key", (int(self.kind), self.depth, self.base, self.order, self.name)
        )

    def __lt__(self, other: "Symbol") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return self.name

    __repr__ = __str__


def var(name: str) -> Symbol:
    return Symbol(name, SymbolKind.VARIABLE)


def param(name: str) -> Symbol:
    return Symbol(name, SymbolKind.PARAMETER)


def func(base: str, arg: str, order: int = 0) -> Symbol:
    """Differential indeterminate f, f', f'' ... of the variable `arg`."""
    name = base + "'" * order + f"({arg})"
    return Symbol(name, SymbolKind.FUNCTION, base=base, order=order, arg=arg)


def exp_func(arg: str) -> Symbol:
    """The exponential of a variable, as a self-derivative indeterminate."""
    return Symbol(f"exp({arg})", SymbolKind.FUNCTION, base="exp", arg=arg, selfder=True)


def successor(sym: Symbol) -> Symbol:
    if sym.selfder:
        return sym
    return func(sym.base, sym.arg, sym.order + 1)
