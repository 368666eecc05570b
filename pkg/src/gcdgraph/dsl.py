"""Concrete syntax for rings and elements.

Ring specs look like::

    Z/6
    F9
    GR(4, 2)
    F3[x]/(x^2) x Z/2
    F2[x]/(x^2)[y]/(y^2)

A spec is a product of tower terms separated by a bare ``x``.  Each term is
a base (Z/m, a finite field Fq, or a Galois ring GR(p^a, d)) followed by
zero or more monic polynomial extensions ``[var]/(poly)``; extension
polynomials may use integer literals and previously bound variables of the
same term.  Fq and GR expand to a base with one extension whose variable is
named ``w``.

Elements are comma-separated tuples, one polynomial expression per factor:
``(1+2*x, 1)``.  Implicit multiplication (``2x``) is accepted.
"""

from itertools import product as iproduct

from .rings import DEFAULT_MAX_CARDINALITY, Element, RingDescriptor, TowerFactor


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_SYMBOLS = set("/()[]^+-*,")


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
        elif ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("EOF", None, len(text)))
    return tokens


class _TokenStream:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        return tok


# -- F_p polynomial helpers (for the Fq / GR expansions) ------------------

def _fp_polydivmod(num, den, p):
    num = [c % p for c in num]
    inv_lead = pow(den[-1], -1, p)
    q = [0] * max(0, len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        c = (num[k + len(den) - 1] * inv_lead) % p
        q[k] = c
        for j, d in enumerate(den):
            num[k + j] = (num[k + j] - c * d) % p
    while num and num[-1] == 0:
        num.pop()
    return q, num


def _fp_irreducible(poly, p):
    d = len(poly) - 1
    if poly[0] == 0:
        return False
    for deg in range(1, d // 2 + 1):
        for combo in iproduct(range(p), repeat=deg):
            div = list(combo) + [1]
            _, rem = _fp_polydivmod(poly, div, p)
            if not rem:
                return False
    return True


def smallest_irreducible(p, d):
    """The first monic irreducible degree-d polynomial over F_p, scanning
    coefficient vectors in counting order (high-degree digits dominate)."""
    for code in range(p ** d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        poly = coeffs + [1]
        if _fp_irreducible(poly, p):
            return poly
    raise ArithmeticError(f"no irreducible polynomial of degree {d} over F_{p}")


def _prime_power(q):
    """(p, a) with q = p^a, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            a = 0
            while q % p == 0:
                q //= p
                a += 1
            return (p, a) if q == 1 else None
        p += 1
    return q, 1


# -- nested-value expression evaluation -----------------------------------

def _embed_const(factor, k, depth):
    v = k % factor.modulus
    for d in range(1, depth + 1):
        v = (v,) + (factor._zero_nested(d - 1),) * (factor.degrees[d - 1] - 1)
    return v


def _var_value(factor, var_index, depth):
    """The extension generator bound at var_index, lifted to `depth`."""
    below = var_index
    deg = factor.degrees[below]
    if deg > 1:
        v = (factor._zero_nested(below), factor._one_nested(below)) + \
            (factor._zero_nested(below),) * (deg - 2)
    else:
        # degree-1 extension: the generator reduces to -constant term
        v = (factor._neg_nested(factor.extensions[below][0], below),)
    for d in range(var_index + 2, depth + 1):
        v = (v,) + (factor._zero_nested(d - 1),) * (factor.degrees[d - 1] - 1)
    return v


def _eval_monomial(factor, coeff, exponents, depth):
    acc = _embed_const(factor, coeff, depth)
    for var_index, e in enumerate(exponents):
        for _ in range(e):
            acc = factor._mul_nested(acc, _var_value(factor, var_index, depth), depth)
    return acc


# -- polynomial expression parser ------------------------------------------

def _parse_poly(ts, variables):
    """Parse an expression into {exponent tuple: int coefficient}."""
    nvars = len(variables)

    def mono_mul(m1, m2):
        out = {}
        for e1, c1 in m1.items():
            for e2, c2 in m2.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return out

    def add_into(dst, src, sign):
        for e, c in src.items():
            dst[e] = dst.get(e, 0) + sign * c

    def parse_atom():
        kind, value, pos = ts.peek()
        if kind == "INT":
            ts.next()
            return {(0,) * nvars: value}
        if kind == "NAME":
            ts.next()
            if value not in variables:
                raise ParseError(f"unbound variable {value!r}", pos)
            exps = [0] * nvars
            exps[variables.index(value)] = 1
            return {tuple(exps): 1}
        if kind == "(":
            ts.next()
            inner = parse_expr()
            ts.expect(")")
            return inner
        raise ParseError(f"unexpected token {value!r} in polynomial", pos)

    def parse_power():
        base = parse_atom()
        while ts.peek()[0] == "^":
            ts.next()
            exp_tok = ts.expect("INT")
            result = {(0,) * nvars: 1}
            for _ in range(exp_tok[1]):
                result = mono_mul(result, base)
            base = result
        return base

    def parse_term():
        result = parse_power()
        while True:
            kind = ts.peek()[0]
            if kind == "*":
                ts.next()
                result = mono_mul(result, parse_power())
            elif kind == "INT" or (kind == "NAME" and ts.peek()[1] in variables):
                # implicit multiplication: 2x, xy
                result = mono_mul(result, parse_power())
            else:
                break
        return result

    def parse_expr():
        sign = 1
        if ts.peek()[0] in ("+", "-"):
            sign = -1 if ts.next()[0] == "-" else 1
        result = {}
        add_into(result, parse_term(), sign)
        while ts.peek()[0] in ("+", "-"):
            sign = -1 if ts.next()[0] == "-" else 1
            add_into(result, parse_term(), sign)
        return result

    return parse_expr()


# -- ring spec parsing ------------------------------------------------------

def _parse_base(ts):
    """Returns (modulus, extensions, variables) for the term's base."""
    kind, value, pos = ts.next()
    if kind != "NAME":
        raise ParseError(f"expected a ring base, found {value!r}", pos)
    if value == "Z":
        ts.expect("/")
        m = ts.expect("INT")[1]
        if m < 2:
            raise ParseError("modulus must be >= 2", pos)
        return m, [], []
    if value == "GR":
        ts.expect("(")
        q = ts.expect("INT")[1]
        ts.expect(",")
        d = ts.expect("INT")[1]
        ts.expect(")")
        pp = _prime_power(q)
        if pp is None:
            raise ParseError(f"GR base {q} is not a prime power", pos)
        p, _ = pp
        if d < 1:
            raise ParseError("GR degree must be >= 1", pos)
        if d == 1:
            return q, [], []
        poly = smallest_irreducible(p, d)
        ext = tuple(c % q for c in poly)
        return q, [ext], ["w"]
    if value.startswith("F") and value[1:].isdigit():
        q = int(value[1:])
        pp = _prime_power(q)
        if pp is None:
            raise ParseError(f"{q} is not a prime power", pos)
        p, a = pp
        if a == 1:
            return p, [], []
        poly = smallest_irreducible(p, a)
        return p, [tuple(poly)], ["w"]
    raise ParseError(f"unknown ring base {value!r}", pos)


def _build_factor(modulus, raw_extensions, variables):
    """Assemble a TowerFactor from int-coefficient first extensions."""
    exts = []
    factor = TowerFactor(modulus)
    for raw in raw_extensions:
        depth = len(exts)
        nested = tuple(_embed_const(factor, c, depth) for c in raw)
        exts.append(nested)
        factor = TowerFactor(modulus, exts, variables[:len(exts)])
    return factor


def _parse_term(ts):
    modulus, raw_exts, variables = _parse_base(ts)
    factor = _build_factor(modulus, raw_exts, variables)
    while ts.peek()[0] == "[":
        ts.next()
        var_tok = ts.expect("NAME")
        var = var_tok[1]
        if var in variables:
            raise ParseError(f"variable {var!r} already bound", var_tok[2])
        ts.expect("]")
        ts.expect("/")
        ts.expect("(")
        poly_pos = ts.peek()[2]
        poly = _parse_poly(ts, variables + [var])
        ts.expect(")")
        depth = len(factor.extensions)
        new_index = len(variables)
        degree = max((e[new_index] for e in poly), default=0)
        if degree < 1:
            raise ParseError("extension polynomial must involve its variable", poly_pos)
        coeffs = []
        for j in range(degree + 1):
            acc = factor._zero_nested(depth)
            for exps, c in poly.items():
                if exps[new_index] != j:
                    continue
                acc = factor._add_nested(
                    acc, _eval_monomial(factor, c, exps[:new_index], depth), depth)
            coeffs.append(acc)
        if coeffs[-1] != factor._one_nested(depth):
            raise ParseError("extension polynomial must be monic", poly_pos)
        variables = variables + [var]
        factor = TowerFactor(modulus,
                             list(factor.extensions) + [tuple(coeffs)],
                             variables)
    return factor


def parse_ring_spec(text, max_cardinality=DEFAULT_MAX_CARDINALITY):
    ts = _TokenStream(text)
    factors = [_parse_term(ts)]
    while True:
        kind, value, pos = ts.peek()
        if kind == "EOF":
            break
        if kind == "NAME" and value == "x":
            ts.next()
            factors.append(_parse_term(ts))
        else:
            raise ParseError(f"expected product separator 'x' or end, found {value!r}", pos)
    return RingDescriptor(factors, max_cardinality=max_cardinality, name=format_ring_factors(factors))


def parse_element(ring, text):
    ts = _TokenStream(text)
    ts.expect("(")
    coeffs = []
    for i, factor in enumerate(ring.factors):
        if i > 0:
            ts.expect(",")
        poly = _parse_poly(ts, list(factor.variables))
        depth = len(factor.extensions)
        acc = factor._zero_nested(depth)
        for exps, c in poly.items():
            acc = factor._add_nested(acc, _eval_monomial(factor, c, exps, depth), depth)
        coeffs.append(factor.flatten(acc))
    ts.expect(")")
    ts.expect("EOF")
    return Element(ring, tuple(coeffs))


# -- printing ---------------------------------------------------------------

def _nested_to_string(factor, value, depth):
    """Render a nested value as a polynomial expression; returns
    (text, needs_parens_when_multiplied)."""
    if depth == 0:
        return str(value), False
    var = factor.variables[depth - 1]
    terms = []
    for j in range(len(value) - 1, -1, -1):
        c = value[j]
        if c == factor._zero_nested(depth - 1):
            continue
        vpart = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
        if c == factor._one_nested(depth - 1) and vpart:
            terms.append(vpart)
            continue
        ctext, compound = _nested_to_string(factor, c, depth - 1)
        if vpart:
            ctext = f"({ctext})" if compound else ctext
            terms.append(f"{ctext}*{vpart}")
        else:
            terms.append(ctext)
    if not terms:
        return "0", False
    return "+".join(terms), len(terms) > 1


def format_factor(factor):
    text = f"Z/{factor.modulus}"
    for i, ext in enumerate(factor.extensions):
        # the extension polynomial renders exactly like a depth-(i+1) value,
        # just with one extra (monic) top coefficient
        poly, _ = _nested_to_string(factor, ext, i + 1)
        text += f"[{factor.variables[i]}]/({poly})"
    return text


def format_ring_factors(factors):
    return " x ".join(format_factor(f) for f in factors)


def format_ring(ring):
    return format_ring_factors(ring.factors)


def format_element(element):
    parts = []
    for factor, flat in zip(element.ring.factors, element.coeffs):
        depth = len(factor.extensions)
        text, _ = _nested_to_string(factor, factor.unflatten(flat), depth)
        parts.append(text)
    return "(" + ", ".join(parts) + ")"
