"""Regenerate src/grassmann_codes/_primitive_table.py.

For every supported (p, n) with p**n <= 2**24 this picks the smallest monic
degree-n polynomial over F_p (ordered by its base-p integer encoding) for which
x has multiplicative order p**n - 1.  Needs sympy for factoring p**n - 1.

    python scripts/gen_primitive_table.py > src/grassmann_codes/_primitive_table.py
"""
from sympy import factorint, primerange

LIMIT = 2 ** 24


def digits(v, p, n):
    out = []
    for _ in range(n):
        out.append(v % p)
        v //= p
    return out


def polymulmod(a, b, f, p):
    # a, b: coefficient lists of length n; f: monic coefficient list of length n+1
    n = len(f) - 1
    prod = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n + 1):
                prod[k - n + i] = (prod[k - n + i] - c * f[i]) % p
    return prod[:n]


def xpow(e, f, p):
    n = len(f) - 1
    result = [1] + [0] * (n - 1)
    base = [0] * n
    if n == 1:
        base = [(-f[0]) % p]
    else:
        base[1] = 1
    while e:
        if e & 1:
            result = polymulmod(result, base, f, p)
        base = polymulmod(base, base, f, p)
        e >>= 1
    return result


def is_primitive(f, p):
    n = len(f) - 1
    if f[0] == 0:
        return False
    order = p ** n - 1
    one = [1] + [0] * (n - 1)
    if xpow(order, f, p) != one:
        return False
    return all(xpow(order // r, f, p) != one for r in factorint(order))


def smallest_primitive(p, n):
    for low in range(p ** n):
        f = digits(low, p, n) + [1]
        if is_primitive(f, p):
            return low + p ** n
    raise RuntimeError((p, n))


def main():
    print('"""Primitive polynomials over F_p, keyed by (p, degree).')
    print()
    print("Values are base-p encodings of the monic modulus (leading coefficient")
    print("included).  Generated by scripts/gen_primitive_table.py; do not edit.")
    print('"""')
    print()
    print("PRIMITIVE_POLYS = {")
    for p in primerange(2, 64):
        n = 1
        while p ** n <= LIMIT:
            print(f"    ({p}, {n}): {smallest_primitive(p, n)},")
            n += 1
    print("}")


if __name__ == "__main__":
    main()
