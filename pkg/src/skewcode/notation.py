"""Text forms for field elements and skew polynomials.

Elements print as powers of the primitive element ("a^k", "a", "1", "0"), or
as coefficient vectors "[c0,c1,...]" over GF(p) when ``vector=True``.
Polynomials print highest degree first, e.g. "x^2 + a^3*x + 2".
"""

from __future__ import annotations

import re

from .errors import ParseError
from .galois import FiniteField, SkewAutomorphism


def format_element(field: FiniteField, a: int, vector: bool = False) -> str:
    if vector:
        return "[" + ",".join(map(str, field.coeffs(a))) + "]"
    if a == 0:
        return "0"
    if a == 1:
        return "1"
    if field.m == 1:
        return str(a)
    k = field.log(a)
    return "a" if k == 1 else f"a^{k}"


def format_poly(f, vector: bool = False) -> str:
    F = f.field
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        coef = format_element(F, c, vector)
        if not mono:
            terms.append(coef)
        elif c == 1 and not vector:
            terms.append(mono)
        else:
            terms.append(f"{coef}*{mono}")
    return " + ".join(terms) or "0"


_ELEM_POW = re.compile(r"^a(?:\^\(?(-?\d+)\)?)?$")


def parse_element(field: FiniteField, text: str) -> int:
    s = text.strip().replace("−", "-")
    if not s:
        raise ParseError("empty field element")
    if s.startswith("-"):
        return field.neg(parse_element(field, s[1:]))
    if s.startswith("(") and s.endswith(")"):
        return parse_element(field, s[1:-1])
    if "*" in s and "[" not in s:
        acc = 1
        for part in s.split("*"):
            acc = field.mul(acc, parse_element(field, part))
        return acc
    if s.startswith("[") and s.endswith("]"):
        try:
            cs = [int(c) for c in s[1:-1].split(",") if c.strip()]
        except ValueError as exc:
            raise ParseError(f"bad coefficient vector {text!r}") from exc
        if len(cs) > field.m:
            raise ParseError(f"vector {text!r} longer than extension degree {field.m}")
        return field.from_coeffs([c % field.p for c in cs])
    if re.fullmatch(r"\d+", s):
        return field.from_int(int(s) % field.p)
    m = _ELEM_POW.match(s)
    if m:
        k = int(m.group(1)) if m.group(1) is not None else 1
        return field.element(k)
    raise ParseError(f"cannot parse field element {text!r}")


def _split_terms(s: str) -> list[tuple[int, str]]:
    """Split at top-level + and - signs; returns (sign, term) pairs."""
    out, depth, cur, sign = [], 0, "", 1
    i = 0
    while i < len(s):
        ch = s[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip() and not cur.rstrip().endswith("^"):
            out.append((sign, cur.strip()))
            sign, cur = (1 if ch == "+" else -1), ""
        elif depth == 0 and ch in "+-" and not cur.strip():
            sign = sign * (1 if ch == "+" else -1)
        else:
            cur += ch
        i += 1
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {s!r}")
    if cur.strip():
        out.append((sign, cur.strip()))
    elif out or s.strip():
        raise ParseError(f"dangling sign in {s!r}")
    return out


_MONO = re.compile(r"^(?:(?P<coef>.+?)\s*\*\s*)?x(?:\^(?P<exp>\d+))?$")


def parse_poly(sigma: SkewAutomorphism, text: str):
    """Parse "x^2 - a^3*x + 2" style input into a SkewPoly."""
    from .skew_poly import SkewPoly

    F = sigma.field
    s = text.strip().replace("−", "-").replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    coeffs: dict[int, int] = {}
    for sign, term in _split_terms(s):
        m = _MONO.match(term)
        if m:
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
            c = parse_element(F, m.group("coef")) if m.group("coef") else 1
        else:
            if "x" in term:
                raise ParseError(f"cannot parse term {term!r}")
            exp, c = 0, parse_element(F, term)
        if sign < 0:
            c = F.neg(c)
        coeffs[exp] = F.add(coeffs.get(exp, 0), c)
    n = max(coeffs) + 1 if coeffs else 0
    return SkewPoly(sigma, [coeffs.get(i, 0) for i in range(n)])


def parse_field(text: str) -> tuple[int, int]:
    """"GF(9)", "GF(3^2)", "9" or "3^2" -> (p, m)."""
    from .galois import is_prime, prime_factors

    s = text.strip().replace(" ", "")
    m = re.fullmatch(r"(?:GF|F)?\(?(\d+)(?:\^(\d+))?\)?", s, re.IGNORECASE)
    if not m:
        raise ParseError(f"cannot parse field {text!r}")
    base, exp = int(m.group(1)), int(m.group(2) or 1)
    if m.group(2):
        if not is_prime(base):
            raise ParseError(f"{base} is not prime in {text!r}")
        return base, exp
    if base < 2:
        raise ParseError(f"field size {base} is too small")
    ps = set(prime_factors(base))
    if len(ps) != 1:
        raise ParseError(f"{base} is not a prime power")
    p = ps.pop()
    k = 0
    while base > 1:
        base //= p
        k += 1
    return p, k
