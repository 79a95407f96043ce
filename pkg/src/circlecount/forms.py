"""Sparse exact representation of integer/real forms and form systems.

Coefficients are Python ints or Fractions (exact paths) or floats (real
combinations).  Evaluation at integer points uses arbitrary-precision
integer arithmetic throughout, so no counting path can overflow silently.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exact import rank_rational

Exponents = Tuple[int, ...]


class SystemDocumentError(ValueError):
    """Raised when a system-description document violates the schema."""


def _is_exact(c) -> bool:
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


class Form:
    """A polynomial sum(c_e * x^e) in n variables of declared degree d."""

    __slots__ = ("n", "d", "terms", "homogeneous")

    def __init__(self, n: int, d: int, terms: Mapping[Exponents, object]):
        if n < 1:
            raise ValueError("need at least one variable")
        if d < 1:
            raise ValueError("declared degree must be >= 1")
        clean: Dict[Exponents, object] = {}
        for e, c in terms.items():
            e = tuple(int(k) for k in e)
            if len(e) != n:
                raise ValueError(f"exponent vector {e} has length != n={n}")
            if any(k < 0 for k in e):
                raise ValueError(f"negative exponent in {e}")
            if sum(e) > d:
                raise ValueError(f"term {e} exceeds declared degree {d}")
            if c == 0:
                continue
            clean[e] = c
        self.n = n
        self.d = d
        self.terms = clean
        self.homogeneous = all(sum(e) == d for e in clean)

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_exact(self) -> bool:
        return all(_is_exact(c) for c in self.terms.values())

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Form) and self.n == other.n and self.d == other.d
                and self.terms == other.terms)

    def __repr__(self) -> str:
        return f"Form(n={self.n}, d={self.d}, {len(self.terms)} terms)"

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, x: Sequence) -> object:
        if len(x) != self.n:
            raise ValueError(f"point has length {len(x)}, expected {self.n}")
        total = 0
        for e, c in self.terms.items():
            mono = 1
            for xi, k in zip(x, e):
                if k:
                    mono *= xi**k
            total += c * mono
        return total

    def gradient(self, x: Sequence) -> List:
        if len(x) != self.n:
            raise ValueError("dimension mismatch")
        out = []
        for j in range(self.n):
            acc = 0
            for e, c in self.terms.items():
                if e[j] == 0:
                    continue
                mono = c * e[j]
                for i, k in enumerate(e):
                    kk = k - 1 if i == j else k
                    if kk:
                        mono *= x[i]**kk
                acc += mono
            out.append(acc)
        return out

    def max_abs_on_ranges(self, lows: Sequence[int], highs: Sequence[int]) -> int:
        """Exact integer bound on |f| over the integer box prod [lo_i, hi_i]."""
        bound = 0
        for e, c in self.terms.items():
            mono = abs(c)
            for lo, hi, k in zip(lows, highs, e):
                if k:
                    mono *= max(abs(lo), abs(hi)) ** k
            bound += mono
        if isinstance(bound, Fraction):
            return -((-bound.numerator) // bound.denominator)
        if isinstance(bound, int):
            return bound
        return int(bound) + 1

    # -- structural transforms ----------------------------------------------

    def leading_part(self) -> "Form":
        """The degree-d part f^[d]; a zero Form when no degree-d term exists."""
        return Form(self.n, self.d, {e: c for e, c in self.terms.items()
                                     if sum(e) == self.d})

    def scale(self, a) -> "Form":
        return Form(self.n, self.d, {e: a * c for e, c in self.terms.items()})

    def add(self, other: "Form") -> "Form":
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError("dimension/degree mismatch")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Form(self.n, self.d, terms)

    def restrict(self, fixed: Mapping[int, object]) -> "Form":
        """Substitute values for the given variable indices; remaining
        variables are reindexed in increasing order."""
        keep = [i for i in range(self.n) if i not in fixed]
        if not keep:
            raise ValueError("cannot restrict away every variable")
        terms: Dict[Exponents, object] = {}
        for e, c in self.terms.items():
            coef = c
            for i, val in fixed.items():
                if e[i]:
                    coef = coef * val ** e[i]
            new_e = tuple(e[i] for i in keep)
            if coef != 0:
                terms[new_e] = terms.get(new_e, 0) + coef
        return Form(len(keep), self.d, {e: c for e, c in terms.items() if c != 0})

    def on_variables(self, variables: Sequence[int]) -> "Form":
        """Project onto terms supported inside `variables` (for separable
        blocks); raises if any term straddles the complement."""
        vset = set(variables)
        order = {v: i for i, v in enumerate(variables)}
        terms: Dict[Exponents, object] = {}
        for e, c in self.terms.items():
            support = {i for i, k in enumerate(e) if k}
            if not support:
                continue
            if not support <= vset:
                raise ValueError("term straddles the variable block")
            new_e = [0] * len(variables)
            for i in support:
                new_e[order[i]] = e[i]
            terms[tuple(new_e)] = c
        return Form(len(variables), self.d, terms)

    def constant_term(self):
        return self.terms.get(tuple([0] * self.n), 0)

    # -- derivative structure -----------------------------------------------

    def sup_norm_leading(self):
        """(1/d!) max over d-fold index tuples of |d-th partial derivative|.

        Equals max over degree-d terms e of |c_e| * e! / d!; 0 for a zero
        leading part.  Exact (Fraction) for exact coefficients.
        """
        best = None
        for e, c in self.terms.items():
            if sum(e) != self.d:
                continue
            weight = 1
            for k in e:
                weight *= factorial(k)
            val = abs(c) * weight
            if best is None or val > best:
                best = val
        if best is None:
            return Fraction(0)
        if _is_exact(best):
            return Fraction(best, factorial(self.d))
        return best / factorial(self.d)

    def derivative_arrangements(self) -> List[Tuple[Exponents, object]]:
        """Sparse d-th derivative tensor as (index-tuple, value) pairs.

        Entry at (j_1, ..., j_d) is c_e * prod(e_i!) for the degree-d term
        whose exponent multiset matches the tuple.
        """
        out: List[Tuple[Exponents, object]] = []
        for e, c in self.terms.items():
            if sum(e) != self.d:
                continue
            weight = 1
            for k in e:
                weight *= factorial(k)
            idx: List[int] = []
            for i, k in enumerate(e):
                idx.extend([i] * k)
            for perm in set(itertools.permutations(idx)):
                out.append((perm, c * weight))
        return out

    def multilinear_gradient(self, vectors: Sequence[Sequence]) -> List:
        """The n-tuple m_i = sum over (d-1)-fold indices of the d-th partial
        tensor contracted against the given d-1 vectors."""
        if len(vectors) != self.d - 1:
            raise ValueError(f"expected {self.d - 1} vectors, got {len(vectors)}")
        for v in vectors:
            if len(v) != self.n:
                raise ValueError("vector length mismatch")
        m = [0] * self.n
        for idx, val in self.derivative_arrangements():
            prod = val
            for k in range(self.d - 1):
                prod = prod * vectors[k][idx[k]]
                if prod == 0:
                    break
            if prod != 0:
                m[idx[self.d - 1]] += prod
        return m


class FormSystem:
    """R forms sharing n and d, with exact leading-part independence flag."""

    def __init__(self, forms: Sequence[Form]):
        if not forms:
            raise ValueError("a system needs at least one form")
        n, d = forms[0].n, forms[0].d
        for f in forms:
            if f.n != n:
                raise ValueError("inconsistent variable count across forms")
            if f.d != d:
                raise ValueError("inconsistent degree across forms")
        self.forms = list(forms)
        self.n = n
        self.d = d
        self.R = len(forms)
        self.leading_independent = self._leading_rank() == self.R

    def _leading_rank(self) -> int:
        exps = sorted({e for f in self.forms for e in f.leading_part().terms})
        if not exps:
            return 0
        rows = [[Fraction(f.terms.get(e, 0)) for e in exps] for f in self.forms]
        return rank_rational(rows)

    @property
    def is_exact(self) -> bool:
        return all(f.is_exact for f in self.forms)

    def evaluate(self, x: Sequence) -> List:
        return [f.evaluate(x) for f in self.forms]

    def combine(self, beta: Sequence) -> Form:
        """The linear combination beta . F, exact when beta is rational."""
        if len(beta) != self.R:
            raise ValueError(f"beta has length {len(beta)}, expected R={self.R}")
        terms: Dict[Exponents, object] = {}
        for b, f in zip(beta, self.forms):
            if b == 0:
                continue
            for e, c in f.terms.items():
                terms[e] = terms.get(e, 0) + b * c
        return Form(self.n, self.d, {e: c for e, c in terms.items() if c != 0})

    def jacobian(self, x: Sequence) -> List[List]:
        return [f.gradient(x) for f in self.forms]

    def leading_system(self) -> "FormSystem":
        return FormSystem([f.leading_part() for f in self.forms])

    def __repr__(self) -> str:
        return f"FormSystem(n={self.n}, d={self.d}, R={self.R})"


class AdmissibleBox:
    """Product of n intervals inside [-1, 1]^n, endpoints exact rationals.

    Side lengths at most 1 make the box strictly admissible; the full
    symmetric box [-1, 1]^n (sides 2) is accepted and flagged, since the
    standard fixtures use it.
    """

    def __init__(self, intervals: Sequence[Tuple]):
        ivals: List[Tuple[Fraction, Fraction]] = []
        for pair in intervals:
            a, b = pair
            a, b = _to_fraction(a), _to_fraction(b)
            if not (-1 <= a <= b <= 1):
                raise ValueError(f"interval [{a}, {b}] not inside [-1, 1]")
            ivals.append((a, b))
        self.intervals = tuple(ivals)
        self.n = len(ivals)
        self.strictly_admissible = all(b - a <= 1 for a, b in ivals)

    @classmethod
    def symmetric(cls, n: int) -> "AdmissibleBox":
        return cls([(-1, 1)] * n)

    @classmethod
    def unit(cls, n: int) -> "AdmissibleBox":
        return cls([(0, 1)] * n)

    def volume(self) -> Fraction:
        v = Fraction(1)
        for a, b in self.intervals:
            v *= b - a
        return v

    def lattice_ranges(self, P) -> List[Tuple[int, int]]:
        """Integer ranges [lo_i, hi_i] with lo_i <= x_i <= hi_i iff
        a_i <= x_i / P <= b_i (closed box convention, exact)."""
        Pq = _to_fraction(P)
        if Pq < 0:
            raise ValueError("P must be nonnegative")
        out = []
        for a, b in self.intervals:
            lo, hi = a * Pq, b * Pq
            lo_i = -((-lo.numerator) // lo.denominator)  # ceil
            hi_i = hi.numerator // hi.denominator        # floor
            out.append((lo_i, hi_i))
        return out

    def point_count(self, P) -> int:
        total = 1
        for lo, hi in self.lattice_ranges(P):
            total *= max(0, hi - lo + 1)
        return total

    def scaled_bounds(self, P) -> List[Tuple[float, float]]:
        Pf = float(P)
        return [(float(a) * Pf, float(b) * Pf) for a, b in self.intervals]

    def __eq__(self, other) -> bool:
        return isinstance(other, AdmissibleBox) and self.intervals == other.intervals

    def __repr__(self) -> str:
        return f"AdmissibleBox({[(str(a), str(b)) for a, b in self.intervals]})"


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**12)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


# -- module-level operation aliases (the documented surface) -----------------


def evaluate(f: Form, x: Sequence):
    return f.evaluate(x)


def leading_part(f: Form) -> Form:
    return f.leading_part()


def combine(system: FormSystem, beta: Sequence) -> Form:
    return system.combine(beta)


def sup_norm_leading(f: Form):
    return f.sup_norm_leading()


def multilinear_gradient(f: Form, vectors: Sequence[Sequence]) -> List:
    return f.multilinear_gradient(vectors)


def jacobian(system: FormSystem, x: Sequence) -> List[List]:
    return system.jacobian(x)


# -- system-description documents --------------------------------------------


def parse_system(document) -> Tuple[FormSystem, Optional[AdmissibleBox]]:
    """Parse a system-description document (JSON text or dict).

    Schema: {"n": int, "d": int, "R": int (optional),
             "forms": [{"terms": [{"exponents": [...], "coeff": int}, ...]}],
             "box": [[lo, hi], ...] (optional, decimal strings or numbers)}
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SystemDocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise SystemDocumentError("document must be a JSON object")
    try:
        n = int(document["n"])
        d = int(document["d"])
        raw_forms = document["forms"]
    except KeyError as exc:
        raise SystemDocumentError(f"missing field {exc}") from exc
    if not isinstance(raw_forms, list) or not raw_forms:
        raise SystemDocumentError("'forms' must be a nonempty list")
    if "R" in document and int(document["R"]) != len(raw_forms):
        raise SystemDocumentError("declared R does not match the number of forms")
    forms = []
    for idx, rf in enumerate(raw_forms):
        entries = rf.get("terms") if isinstance(rf, dict) else None
        if not isinstance(entries, list):
            raise SystemDocumentError(f"form {idx}: missing 'terms' list")
        terms: Dict[Exponents, int] = {}
        for t in entries:
            try:
                e = tuple(int(k) for k in t["exponents"])
                c = t["coeff"]
            except (KeyError, TypeError) as exc:
                raise SystemDocumentError(f"form {idx}: malformed term {t}") from exc
            if not isinstance(c, int) or isinstance(c, bool):
                raise SystemDocumentError(f"form {idx}: coefficient {c!r} is not an integer")
            if c == 0:
                raise SystemDocumentError(f"form {idx}: zero coefficient stored at {e}")
            if len(e) != n:
                raise SystemDocumentError(f"form {idx}: exponent vector {e} has length != n")
            if sum(e) > d:
                raise SystemDocumentError(
                    f"form {idx}: inconsistent degree (term {e} exceeds d={d})")
            if e in terms:
                raise SystemDocumentError(f"form {idx}: duplicate exponent vector {e}")
            terms[e] = c
        if not terms:
            raise SystemDocumentError(f"form {idx}: zero form supplied")
        forms.append(Form(n, d, terms))
    system = FormSystem(forms)
    box = None
    if document.get("box") is not None:
        raw_box = document["box"]
        if len(raw_box) != n:
            raise SystemDocumentError("box must list one interval per variable")
        box = AdmissibleBox([(pair[0], pair[1]) for pair in raw_box])
    return system, box


def system_to_document(system: FormSystem, box: Optional[AdmissibleBox] = None) -> dict:
    """Canonical (byte-stable) document: exponent vectors sorted."""
    doc = {
        "n": system.n,
        "d": system.d,
        "R": system.R,
        "forms": [
            {"terms": [{"exponents": list(e), "coeff": int(f.terms[e])}
                       for e in sorted(f.terms)]}
            for f in system.forms
        ],
    }
    if box is not None:
        doc["box"] = [[str(a), str(b)] for a, b in box.intervals]
    return doc


def monomial(n: int, d: int, exps: Iterable[int], coeff=1) -> Form:
    return Form(n, d, {tuple(exps): coeff})


def from_strings(n: int, d: int, term_lists: Sequence[Sequence[Tuple[Sequence[int], int]]]
                 ) -> FormSystem:
    """Convenience constructor from [(exponents, coeff), ...] per form."""
    return FormSystem([Form(n, d, {tuple(e): c for e, c in tl}) for tl in term_lists])
