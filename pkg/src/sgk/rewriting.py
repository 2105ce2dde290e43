"""Degree-truncated rewriting in the free algebra.

Rules rewrite a leading word (under weighted deglex) into a strictly smaller
polynomial, so reduction terminates unconditionally.  Completion resolves all
overlap and containment ambiguities whose ambiguity word has degree <= D,
processed by deglex of the ambiguity word with FIFO tie-breaking; for
homogeneous ideals this makes normal-word counts exact in all degrees <= D.
Counting walks a pattern-avoidance automaton, so large degrees stay cheap.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .errors import SgkError
from .freealg import Poly, WordOrder
from .presentation import Presentation


@dataclass(frozen=True)
class Rule:
    lead: tuple
    rhs: Poly  # strictly smaller than lead under the system order


class RewriteSystem:
    def __init__(self, ngens: int, order: WordOrder, rules: list, complete_to: int):
        self.ngens = ngens
        self.order = order
        self.rules = rules
        self.complete_to = complete_to

    @property
    def leads(self) -> list:
        return [r.lead for r in self.rules]

    def _find_redex(self, w: tuple):
        """Leftmost (position, rule) match in w, rules tried in insertion order."""
        for pos in range(len(w)):
            for rule in self.rules:
                L = rule.lead
                if w[pos : pos + len(L)] == L:
                    return pos, rule
        return None

    def reduce(self, f: Poly) -> Poly:
        """Normal form: repeatedly rewrite the largest reducible term."""
        terms = dict(f.terms)
        key = self.order.key
        while True:
            redex = None
            for w in sorted(terms, key=key, reverse=True):
                hit = self._find_redex(w)
                if hit is not None:
                    redex = (w, *hit)
                    break
            if redex is None:
                return Poly(f.field, f.ngens, terms)
            w, pos, rule = redex
            c = terms.pop(w)
            pre, suf = w[:pos], w[pos + len(rule.lead) :]
            for rw, rc in rule.rhs.terms.items():
                nw = pre + rw + suf
                nc = terms.get(nw)
                nc = c * rc if nc is None else nc + c * rc
                if nc:
                    terms[nw] = nc
                else:
                    terms.pop(nw, None)

    def normal_words(self, max_degree: int) -> list:
        """Counts of irreducible words by degree, 0..max_degree."""
        return _count_avoiding(self.ngens, self.leads, self.order, max_degree)


def _make_rule(f: Poly, order: WordOrder) -> Rule:
    lead = f.leading_word(order)
    if lead == ():
        raise SgkError("the relations generate the unit ideal")
    inv = f.field.one / f.terms[lead]
    rhs_terms = {w: -a * inv for w, a in f.terms.items() if w != lead}
    rhs = Poly(f.field, f.ngens, rhs_terms)
    lead_key = order.key(lead)
    assert all(order.key(w) < lead_key for w in rhs.terms), "rule must shrink"
    return Rule(lead, rhs)


def _apply_at(rule: Rule, w: tuple, pos: int, ngens: int) -> Poly:
    pre, suf = w[:pos], w[pos + len(rule.lead) :]
    rhs = rule.rhs
    return Poly(rhs.field, ngens, {pre + rw + suf: rc for rw, rc in rhs.terms.items()})


def complete(p: Presentation, max_degree: int, order: WordOrder | None = None) -> RewriteSystem:
    """Resolve all ambiguities of degree <= max_degree.

    Input relations are added first, in presentation order; critical pairs are
    then processed by deglex of the ambiguity word, FIFO within equal words.
    """
    if order is None:
        order = WordOrder(p.weights or (1,) * p.ngens)
    system = RewriteSystem(p.ngens, order, [], max_degree)
    queue: list = []  # (ambiguity key, seq, s_poly)
    seq = 0

    def push(w: tuple, s_poly: Poly) -> None:
        nonlocal seq
        if order.degree(w) <= max_degree:
            heapq.heappush(queue, (order.key(w), seq, s_poly))
            seq += 1

    def enqueue_pairs(new_rule: Rule) -> None:
        for other in system.rules:
            directions = [(new_rule, other)]
            if other is not new_rule:
                directions.append((other, new_rule))
            for first, second in directions:
                A, B = first.lead, second.lead
                # proper overlap: a suffix of A equals a prefix of B
                for k in range(1, min(len(A), len(B))):
                    if A[-k:] == B[:k]:
                        w = A + B[k:]
                        p1 = _apply_at(first, w, 0, p.ngens)
                        p2 = _apply_at(second, w, len(A) - k, p.ngens)
                        push(w, p1 - p2)
                # proper containment: B occurs inside A
                if len(B) < len(A):
                    for pos in range(len(A) - len(B) + 1):
                        if A[pos : pos + len(B)] == B:
                            p1 = _apply_at(first, A, 0, p.ngens)
                            p2 = _apply_at(second, A, pos, p.ngens)
                            push(A, p1 - p2)

    def add_rule(f: Poly) -> None:
        g = system.reduce(f)
        if g.is_zero():
            return
        rule = _make_rule(g, order)
        system.rules.append(rule)
        enqueue_pairs(rule)

    for rel in p.relations:
        add_rule(rel)
    while queue:
        _, _, s_poly = heapq.heappop(queue)
        add_rule(s_poly)
    return system


# -- pattern-avoidance automaton --------------------------------------------------


def _count_avoiding(ngens: int, patterns: list, order: WordOrder, max_degree: int) -> list:
    """Number of words of each degree containing no pattern as a subword."""
    weights = order.weights or (1,) * ngens
    children: list = [dict()]
    fail = [0]
    terminal = [False]
    for pat in patterns:
        node = 0
        for c in pat:
            nxt = children[node].setdefault(c, len(children))
            if nxt == len(fail):
                children.append(dict())
                fail.append(0)
                terminal.append(False)
            node = nxt
        terminal[node] = True

    bfs = deque()
    for nxt in children[0].values():
        fail[nxt] = 0
        bfs.append(nxt)
    while bfs:
        node = bfs.popleft()
        terminal[node] = terminal[node] or terminal[fail[node]]
        for c, nxt in children[node].items():
            f = fail[node]
            while f != 0 and c not in children[f]:
                f = fail[f]
            fail[nxt] = children[f].get(c, 0)
            bfs.append(nxt)

    nstates = len(children)
    delta = [[0] * ngens for _ in range(nstates)]
    for node in range(nstates):
        for c in range(ngens):
            f = node
            while True:
                if c in children[f]:
                    delta[node][c] = children[f][c]
                    break
                if f == 0:
                    delta[node][c] = 0
                    break
                f = fail[f]

    counts = [0] * (max_degree + 1)
    dp = {0: {0: 1}}  # degree -> state -> count of avoiding words
    for d in range(0, max_degree + 1):
        layer = dp.pop(d, None)
        if layer is None:
            continue
        counts[d] = sum(layer.values())
        for state, cnt in layer.items():
            for c in range(ngens):
                nd = d + weights[c]
                if nd > max_degree:
                    continue
                nxt = delta[state][c]
                if terminal[nxt]:
                    continue
                tgt = dp.setdefault(nd, {})
                tgt[nxt] = tgt.get(nxt, 0) + cnt
    return counts
