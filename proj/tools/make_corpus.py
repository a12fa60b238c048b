#!/usr/bin/env python3
"""Regenerates corpus/*.grp and include/pgro/corpus_data.hpp.

Small groups are given by permutation generators; the rest by explicit
multiplication laws, which are expanded here into Cayley tables and checked
for the group axioms by brute force.
"""

import itertools
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent


def cycle_perm(degree, *cycles):
    img = list(range(1, degree + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
    return img


def perm_file(label, degree, gens, comment):
    lines = [f"# {label}: {comment}", f"perm {degree} {len(gens)}"]
    lines += [" ".join(map(str, g)) for g in gens]
    return "\n".join(lines) + "\n"


def table_file(label, mul, identity, gens, comment):
    elems = [identity]
    index = {identity: 0}
    head = 0
    while head < len(elems):
        x = elems[head]
        head += 1
        for g in gens:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
    n = len(elems)
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    for a, b, c in itertools.product(range(n), repeat=3):
        assert table[table[a][b]][c] == table[a][table[b][c]], label
    for row in table:
        assert sorted(row) == list(range(n)), label
    lines = [f"# {label}: {comment}", f"table {n} {len(gens)}"]
    lines += [" ".join(str(v + 1) for v in row) for row in table]
    lines.append(" ".join(str(index[g] + 1) for g in gens))
    return n, "\n".join(lines) + "\n"


def metacyclic(m, k, s, t):
    """<x, y | x^m, y^k = x^t, y x y^-1 = x^s> on pairs (i, j) = x^i y^j."""

    def mul(a, b):
        i = (a[0] + pow(s, a[1], m) * b[0]) % m
        j = a[1] + b[1]
        if j >= k:
            j -= k
            i = (i + t) % m
        return (i, j)

    return mul, (0, 0), [(1, 0), (0, 1)]


def direct(*factors):
    def mul(a, b):
        return tuple(f[0](x, y) for f, x, y in zip(factors, a, b))

    identity = tuple(f[1] for f in factors)
    gens = []
    for i, f in enumerate(factors):
        for g in f[2]:
            e = list(identity)
            e[i] = g
            gens.append(tuple(e))
    return mul, identity, gens


def cyclic(m):
    return (lambda a, b: (a + b) % m), 0, [1]


def wreath_cyclic(m, k):
    """C_m wr C_k: (v, j) with v in Z_m^k and the top group cyclically
    shifting coordinates."""

    def shift(v, j):
        return tuple(v[(i - j) % k] for i in range(k))

    def mul(a, b):
        v = shift(b[0], a[1])
        return (tuple((x + y) % m for x, y in zip(a[0], v)), (a[1] + b[1]) % k)

    base = tuple([1] + [0] * (k - 1))
    return mul, (tuple([0] * k), 0), [(base, 0), (tuple([0] * k), 1)]


def semidirect_32():
    """<a,b,c> elementary abelian of order 8, phi of order 4 acting by
    conjugation a -> b -> c -> abc. Bits 1,2,4 are a,b,c."""

    def act(v):
        a, b, c = v & 1, (v >> 1) & 1, (v >> 2) & 1
        # image of a is b, of b is c, of c is abc
        out = 0
        if a:
            out ^= 2
        if b:
            out ^= 4
        if c:
            out ^= 7
        return out

    def act_k(v, k):
        for _ in range(k):
            v = act(v)
        return v

    def mul(x, y):
        return (x[0] ^ act_k(y[0], x[1]), (x[1] + y[1]) % 4)

    return mul, (0, 0), [(1, 0), (0, 1)]


def heisenberg(p):
    def mul(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    return mul, (0, 0, 0), [(1, 0, 0), (0, 1, 0)]


def main():
    entries = []

    def add_perm(label, degree, order, gens, comment):
        entries.append((label, order, perm_file(label, degree, gens, comment)))

    def add_table(label, group, comment, gens=None):
        mul, identity, default_gens = group
        n, text = table_file(label, mul, identity, gens or default_gens, comment)
        entries.append((label, n, text))

    add_perm("C2", 2, 2, [cycle_perm(2, [1, 2])], "cyclic of order 2")
    add_perm("C4", 4, 4, [cycle_perm(4, [1, 2, 3, 4])], "cyclic of order 4")
    add_perm("C8", 8, 8, [cycle_perm(8, list(range(1, 9)))], "cyclic of order 8")
    add_perm("V4", 4, 4, [cycle_perm(4, [1, 2], [3, 4]), cycle_perm(4, [1, 3], [2, 4])], "Klein four group")
    add_perm("C2xC4", 6, 8, [cycle_perm(6, [1, 2]), cycle_perm(6, [3, 4, 5, 6])], "C2 x C4")
    add_perm("C2^3", 6, 8, [cycle_perm(6, [1, 2]), cycle_perm(6, [3, 4]), cycle_perm(6, [5, 6])],
             "elementary abelian of order 8")
    add_perm("D8", 4, 8, [cycle_perm(4, [1, 2, 3, 4]), cycle_perm(4, [2, 4])], "dihedral of order 8")
    add_table("Q8", metacyclic(4, 2, 3, 2), "quaternion of order 8")
    add_perm("C9", 9, 9, [cycle_perm(9, list(range(1, 10)))], "cyclic of order 9")
    add_perm("C3xC3", 6, 9, [cycle_perm(6, [1, 2, 3]), cycle_perm(6, [4, 5, 6])], "elementary abelian of order 9")
    add_perm("C4xC4", 8, 16, [cycle_perm(8, [1, 2, 3, 4]), cycle_perm(8, [5, 6, 7, 8])], "C4 x C4")
    add_perm("C5xC5", 10, 25, [cycle_perm(10, [1, 2, 3, 4, 5]), cycle_perm(10, [6, 7, 8, 9, 10])],
             "elementary abelian of order 25")
    add_table("3^1+2", heisenberg(3), "extraspecial of order 27, exponent 3")
    add_table("C9:C3", metacyclic(9, 3, 4, 0), "extraspecial of order 27, exponent 9")
    add_table("C2^3:C4", semidirect_32(),
              "<a,b,c> x| <phi>, phi conjugates a -> b -> c -> abc; generators a, phi")
    add_table("D32", metacyclic(16, 2, 15, 0), "dihedral of order 32")
    add_table("Q32", metacyclic(16, 2, 15, 8), "generalised quaternion of order 32")
    add_table("SD32", metacyclic(16, 2, 7, 0), "semidihedral of order 32")
    add_table("M32", metacyclic(16, 2, 9, 0), "modular of order 32")
    add_table("C4wrC2", wreath_cyclic(4, 2), "wreath product C4 wr C2")
    add_table("C8xC4", direct(cyclic(8), cyclic(4)), "C8 x C4")
    add_table("C2xD16", direct(cyclic(2), metacyclic(8, 2, 7, 0)), "C2 x dihedral of order 16")
    add_table("C2wrC4", wreath_cyclic(2, 4), "wreath product C2 wr C4, order 64")
    add_table("C8:C8", metacyclic(8, 8, 5, 0), "metacyclic C8 x| C8, y x y^-1 = x^5")

    corpus_dir = ROOT / "corpus"
    corpus_dir.mkdir(exist_ok=True)
    for label, _, text in entries:
        (corpus_dir / f"{label}.grp").write_text(text)

    out = [
        "// Generated by tools/make_corpus.py; do not edit.",
        "#ifndef PGRO_CORPUS_DATA_HPP",
        "#define PGRO_CORPUS_DATA_HPP",
        "",
        "#include <cstddef>",
        "#include <string_view>",
        "",
        "namespace pgro::corpus_data {",
        "",
        "struct Source {",
        "  std::string_view label;",
        "  std::size_t order;",
        "  std::string_view text;",
        "};",
        "",
        "inline constexpr Source sources[] = {",
    ]
    for label, order, text in entries:
        out.append(f'    {{"{label}", {order}, R"grp({text})grp"}},')
    out += ["};", "", "}  // namespace pgro::corpus_data", "", "#endif  // PGRO_CORPUS_DATA_HPP", ""]
    (ROOT / "include" / "pgro" / "corpus_data.hpp").write_text("\n".join(out))


if __name__ == "__main__":
    main()
