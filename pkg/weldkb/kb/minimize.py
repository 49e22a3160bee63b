"""The rule minimization routine"""

from typing import Callable, NamedTuple

from ..words import Alphabet, Rule, Word, shortlex_key

WordReducer = Callable[[Word], Word]


class MinimizationOutput(NamedTuple):
    """The minimized rule and whether a proper substring of the left-hand side was reducible.

    ``rule`` is the input object itself when nothing changed and ``(ε, ε)`` when the input is redundant.
    """

    rule: Rule
    lhs_affected: bool


def minimize_rule(rule: Rule, reduce_word: WordReducer, alphabet: Alphabet) -> MinimizationOutput:
    u, v = rule.lhs, rule.rhs
    inverse = alphabet.inverses

    affected = False
    if len(u) > 1:
        prefix = reduce_word(u[:-1])
        if prefix != u[:-1]:
            u = prefix + u[-1:]
            affected = True
        else:
            suffix = reduce_word(u[1:])
            if suffix != u[1:]:
                u = u[:1] + suffix
                affected = True
    if affected:
        u = reduce_word(u)

    while True:
        before = (u, v)
        # move letters from the end of u to the end of v until the lengths are close enough
        while len(u) > len(v) + 2 or (len(u) == len(v) + 2 and v and u[0] > v[0]):
            u, v = u[:-1], v + (inverse[u[-1]],)
        if len(u) == len(v) + 2 and u[1] > inverse[u[0]]:
            u, v = u[1:], (inverse[u[0]],) + v
        while u and v and u[0] == v[0]:
            u, v = u[1:], v[1:]
        while u and v and u[-1] == v[-1]:
            u, v = u[:-1], v[:-1]
        v = reduce_word(v)
        if shortlex_key(v) > shortlex_key(u):
            u, v = v, u
        if (u, v) == before:
            break

    if (u, v) == rule.key:
        return MinimizationOutput(rule, affected)
    return MinimizationOutput(Rule(u, v, priority=rule.priority), affected)
