// Generated by tools/make_corpus.py; do not edit.
#ifndef PGRO_CORPUS_DATA_HPP
#define PGRO_CORPUS_DATA_HPP

#include <cstddef>
#include <string_view>

namespace pgro::corpus_data {

struct Source {
  std::string_view label;
  std::size_t order;
  std::string_view text;
};

inline constexpr Source sources[] = {
    {"C2", 2, R"grp(# C2: cyclic of order 2
perm 2 1
2 1
)grp"},
    {"C4", 4, R"grp(# C4: cyclic of order 4
perm 4 1
2 3 4 1
)grp"},
    {"C8", 8, R"grp(# C8: cyclic of order 8
perm 8 1
2 3 4 5 6 7 8 1
)grp"},
    {"V4", 4, R"grp(# V4: Klein four group
perm 4 2
2 1 4 3
3 4 1 2
)grp"},
    {"C2xC4", 8, R"grp(# C2xC4: C2 x C4
perm 6 2
2 1 3 4 5 6
1 2 4 5 6 3
)grp"},
    {"C2^3", 8, R"grp(# C2^3: elementary abelian of order 8
perm 6 3
2 1 3 4 5 6
1 2 4 3 5 6
1 2 3 4 6 5
)grp"},
    {"D8", 8, R"grp(# D8: dihedral of order 8
perm 4 2
2 3 4 1
1 4 3 2
)grp"},
    {"Q8", 8, R"grp(# Q8: quaternion of order 8
table 8 2
1 2 3 4 5 6 7 8
2 4 5 7 8 3 1 6
3 6 4 8 2 7 5 1
4 7 8 1 6 5 2 3
5 3 7 6 4 1 8 2
6 8 2 5 1 4 3 7
7 1 6 2 3 8 4 5
8 5 1 3 7 2 6 4
2 3
)grp"},
    {"C9", 9, R"grp(# C9: cyclic of order 9
perm 9 1
2 3 4 5 6 7 8 9 1
)grp"},
    {"C3xC3", 9, R"grp(# C3xC3: elementary abelian of order 9
perm 6 2
2 3 1 4 5 6
1 2 3 5 6 4
)grp"},
    {"C4xC4", 16, R"grp(# C4xC4: C4 x C4
perm 8 2
2 3 4 1 5 6 7 8
1 2 3 4 6 7 8 5
)grp"},
    {"C5xC5", 25, R"grp(# C5xC5: elementary abelian of order 25
perm 10 2
2 3 4 5 1 6 7 8 9 10
1 2 3 4 5 7 8 9 10 6
)grp"},
    {"3^1+2", 27, R"grp(# 3^1+2: extraspecial of order 27, exponent 3
table 27 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27
2 4 5 1 8 9 10 3 14 15 16 17 18 6 7 21 22 23 24 25 11 12 13 26 27 19 20
3 6 7 11 12 13 1 18 15 19 17 20 2 22 25 23 4 24 21 5 10 26 27 8 9 14 16
4 1 8 2 3 14 15 5 6 7 21 22 23 9 10 11 12 13 26 27 16 17 18 19 20 24 25
5 9 10 16 17 18 2 23 7 24 22 25 4 12 27 13 1 26 11 8 15 19 20 3 14 6 21
6 11 12 3 18 15 19 7 22 25 23 4 24 13 1 10 26 27 8 9 17 20 2 14 16 21 5
7 13 1 17 20 2 3 24 25 21 4 5 6 26 9 27 11 8 10 12 19 14 16 18 15 22 23
8 14 15 21 22 23 4 13 10 26 12 27 1 17 20 18 2 19 16 3 7 24 25 5 6 9 11
9 16 17 5 23 7 24 10 12 27 13 1 26 18 2 15 19 20 3 14 22 25 4 6 21 11 8
10 18 2 22 25 4 5 26 27 11 1 8 9 19 14 20 16 3 15 17 24 6 21 23 7 12 13
11 3 18 6 7 22 25 12 13 1 10 26 27 15 19 17 20 2 14 16 23 4 24 21 5 8 9
12 15 19 23 4 24 6 27 1 8 26 9 11 20 16 2 3 14 17 18 25 21 5 7 22 13 10
13 17 20 7 24 25 21 1 26 9 27 11 8 2 3 19 14 16 18 15 4 5 6 22 23 10 12
14 21 22 8 13 10 26 15 17 20 18 2 19 23 4 7 24 25 5 6 12 27 1 9 11 16 3
15 23 4 12 27 1 8 19 20 16 2 3 14 24 6 25 21 5 7 22 26 9 11 13 10 17 18
16 5 23 9 10 12 27 17 18 2 15 19 20 7 24 22 25 4 6 21 13 1 26 11 8 3 14
17 7 24 13 1 26 9 20 2 3 19 14 16 25 21 4 5 6 22 23 27 11 8 10 12 18 15
18 22 25 10 26 27 11 2 19 14 20 16 3 4 5 24 6 21 23 7 1 8 9 12 13 15 17
19 24 6 26 9 11 12 14 16 17 3 18 15 21 22 5 23 7 25 4 8 13 10 27 1 20 2
20 25 21 27 11 8 13 16 3 18 14 15 17 5 23 6 7 22 4 24 9 10 12 1 26 2 19
21 8 13 14 15 17 20 22 23 4 7 24 25 10 26 12 27 1 9 11 18 2 19 16 3 5 6
22 10 26 18 2 19 14 25 4 5 24 6 21 27 11 1 8 9 12 13 20 16 3 15 17 23 7
23 12 27 15 19 20 16 4 24 6 25 21 5 1 8 26 9 11 13 10 2 3 14 17 18 7 22
24 26 9 19 14 16 17 6 21 22 5 23 7 11 12 8 13 10 27 1 3 18 15 20 2 25 4
25 27 11 20 16 3 18 21 5 23 6 7 22 8 13 9 10 12 1 26 14 15 17 2 19 4 24
26 19 14 24 6 21 22 9 11 12 8 13 10 16 17 3 18 15 20 2 5 23 7 25 4 27 1
27 20 16 25 21 5 23 11 8 13 9 10 12 3 18 14 15 17 2 19 6 7 22 4 24 1 26
2 3
)grp"},
    {"C9:C3", 27, R"grp(# C9:C3: extraspecial of order 27, exponent 9
table 27 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27
2 4 5 8 9 10 11 15 16 17 18 3 19 20 22 6 23 24 25 7 26 27 12 13 14 1 21
3 6 7 12 13 14 1 16 20 18 15 19 21 2 23 24 25 26 4 22 5 9 11 8 27 10 17
4 8 9 15 16 17 18 22 6 23 24 5 25 7 27 10 12 13 14 11 1 21 3 19 20 2 26
5 10 11 3 19 20 2 6 7 24 22 25 26 4 12 13 14 1 8 27 9 16 18 15 21 17 23
6 12 13 16 20 18 15 23 24 25 26 7 4 22 9 14 11 8 27 1 10 17 19 21 2 3 5
7 14 1 19 21 2 3 24 22 26 23 4 5 6 11 8 27 10 12 9 13 20 15 16 17 18 25
8 15 16 22 6 23 24 27 10 12 13 9 14 11 21 17 3 19 20 18 2 26 5 25 7 4 1
9 17 18 5 25 7 4 10 11 13 27 14 1 8 3 19 20 2 15 21 16 6 24 22 26 23 12
10 3 19 6 7 24 22 12 13 14 1 11 8 27 16 20 18 15 21 2 17 23 25 26 4 5 9
11 20 2 25 26 4 5 13 27 1 12 8 9 10 18 15 21 17 3 16 19 7 22 6 23 24 14
12 16 20 23 24 25 26 9 14 11 8 13 27 1 17 18 19 21 2 15 3 5 7 4 22 6 10
13 18 15 7 4 22 6 14 1 8 9 27 10 12 19 21 2 3 16 17 20 24 26 23 5 25 11
14 19 21 24 22 26 23 11 8 27 10 1 12 9 20 2 15 16 17 3 18 25 4 5 6 7 13
15 22 6 27 10 12 13 21 17 3 19 16 20 18 26 23 5 25 7 24 4 1 9 14 11 8 2
16 23 24 9 14 11 8 17 18 19 21 20 2 15 5 25 7 4 22 26 6 10 13 27 1 12 3
17 5 25 10 11 13 27 3 19 20 2 18 15 21 6 7 24 22 26 4 23 12 14 1 8 9 16
18 7 4 14 1 8 9 19 21 2 3 15 16 17 24 22 26 23 5 6 25 11 27 10 12 13 20
19 24 22 11 8 27 10 20 2 15 16 21 17 3 25 26 4 5 6 23 7 13 1 12 9 14 18
20 25 26 13 27 1 12 18 15 21 17 2 3 16 7 4 22 6 23 5 24 14 8 9 10 11 19
21 26 23 1 12 9 14 2 3 16 20 17 18 19 4 5 6 7 24 25 22 8 10 11 13 27 15
22 27 10 21 17 3 19 26 23 5 25 6 7 24 1 12 9 14 11 13 8 2 16 20 18 15 4
23 9 14 17 18 19 21 5 25 7 4 24 22 26 10 11 13 27 1 8 12 3 20 2 15 16 6
24 11 8 20 2 15 16 25 26 4 5 22 6 23 13 27 1 12 9 10 14 18 21 17 3 19 7
25 13 27 18 15 21 17 7 4 22 6 26 23 5 14 1 8 9 10 12 11 19 2 3 16 20 24
26 1 12 2 3 16 20 4 5 6 7 23 24 25 8 9 10 11 13 14 27 15 17 18 19 21 22
27 21 17 26 23 5 25 1 12 9 14 10 11 13 2 3 16 20 18 19 15 4 6 7 24 22 8
2 3
)grp"},
    {"C2^3:C4", 32, R"grp(# C2^3:C4: <a,b,c> x| <phi>, phi conjugates a -> b -> c -> abc; generators a, phi
table 32 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32
2 1 4 3 7 8 5 6 12 13 14 9 10 11 19 20 21 22 15 16 17 18 26 27 28 23 24 25 31 32 29 30
3 5 6 9 10 11 15 16 17 18 1 22 21 23 20 24 25 2 14 28 27 26 29 30 4 32 31 7 19 8 13 12
4 7 8 12 13 14 19 20 21 22 2 18 17 26 16 27 28 1 11 25 24 23 31 32 3 30 29 5 15 6 10 9
5 3 9 6 15 16 10 11 22 21 23 17 18 1 14 28 27 26 20 24 25 2 32 31 7 29 30 4 13 12 19 8
6 10 11 17 18 1 20 24 25 2 3 26 27 29 28 30 4 5 23 7 31 32 19 8 9 12 13 15 14 16 21 22
7 4 12 8 19 20 13 14 18 17 26 21 22 2 11 25 24 23 16 27 28 1 30 29 5 31 32 3 10 9 15 6
8 13 14 21 22 2 16 27 28 1 4 23 24 31 25 32 3 7 26 5 29 30 15 6 12 9 10 19 11 20 17 18
9 15 16 22 21 23 14 28 27 26 5 2 25 32 24 31 7 3 1 4 30 29 13 12 6 8 19 10 20 11 18 17
10 6 17 11 20 24 18 1 26 27 29 25 2 3 23 7 31 32 28 30 4 5 12 13 15 19 8 9 21 22 14 16
11 18 1 25 2 3 28 30 4 5 6 32 31 19 7 8 9 10 29 15 13 12 14 16 17 22 21 20 23 24 27 26
12 19 20 18 17 26 11 25 24 23 7 1 28 30 27 29 5 4 2 3 32 31 10 9 8 6 15 13 16 14 22 21
13 8 21 14 16 27 22 2 23 24 31 28 1 4 26 5 29 30 25 32 3 7 9 10 19 15 6 12 17 18 11 20
14 22 2 28 1 4 25 32 3 7 8 30 29 15 5 6 12 13 31 19 10 9 11 20 21 18 17 16 26 27 24 23
15 9 22 16 14 28 21 23 2 25 32 27 26 5 1 4 30 29 24 31 7 3 8 19 10 13 12 6 18 17 20 11
16 21 23 27 26 5 24 31 7 3 9 29 30 13 4 12 6 15 32 10 19 8 20 11 22 17 18 14 1 28 25 2
17 20 24 26 27 29 23 7 31 32 10 5 4 12 30 13 15 6 3 9 8 19 21 22 11 16 14 18 28 1 2 25
18 11 25 1 28 30 2 3 32 31 19 4 5 6 29 15 13 12 7 8 9 10 22 21 20 14 16 17 27 26 23 24
19 12 18 20 11 25 17 26 1 28 30 24 23 7 2 3 32 31 27 29 5 4 6 15 13 10 9 8 22 21 16 14
20 17 26 24 23 7 27 29 5 4 12 31 32 10 3 9 8 19 30 13 15 6 16 14 18 21 22 11 2 25 28 1
21 16 27 23 24 31 26 5 29 30 13 7 3 9 32 10 19 8 4 12 6 15 17 18 14 20 11 22 25 2 1 28
22 14 28 2 25 32 1 4 30 29 15 3 7 8 31 19 10 9 5 6 12 13 18 17 16 11 20 21 24 23 26 27
23 26 5 7 3 9 4 12 6 15 16 8 19 20 10 11 22 21 13 14 18 17 1 28 27 2 25 24 32 31 30 29
24 27 29 31 32 10 30 13 15 6 17 19 8 21 9 22 11 20 12 18 14 16 28 1 26 25 2 23 3 7 4 5
25 28 30 32 31 19 29 15 13 12 18 10 9 22 8 21 20 11 6 17 16 14 27 26 1 24 23 2 7 3 5 4
26 23 7 5 4 12 3 9 8 19 20 6 15 16 13 14 18 17 10 11 22 21 2 25 24 1 28 27 30 29 32 31
27 24 31 29 30 13 32 10 19 8 21 15 6 17 12 18 14 16 9 22 11 20 25 2 23 28 1 26 4 5 3 7
28 25 32 30 29 15 31 19 10 9 22 13 12 18 6 17 16 14 8 21 20 11 24 23 2 27 26 1 5 4 7 3
29 32 10 15 6 17 9 22 11 20 24 16 14 28 18 1 26 27 21 23 2 25 3 7 31 5 4 30 12 13 8 19
30 31 19 13 12 18 8 21 20 11 25 14 16 27 17 26 1 28 22 2 23 24 7 3 32 4 5 29 6 15 9 10
31 30 13 19 8 21 12 18 14 16 27 20 11 25 22 2 23 24 17 26 1 28 4 5 29 7 3 32 9 10 6 15
32 29 15 10 9 22 6 17 16 14 28 11 20 24 21 23 2 25 18 1 26 27 5 4 30 3 7 31 8 19 12 13
2 3
)grp"},
    {"D32", 32, R"grp(# D32: dihedral of order 32
table 32 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32
2 4 5 7 8 3 11 12 6 1 15 16 9 10 19 20 13 14 23 24 17 18 27 28 21 22 31 32 25 26 30 29
3 6 1 9 10 2 13 14 4 5 17 18 7 8 21 22 11 12 25 26 15 16 29 30 19 20 32 31 23 24 28 27
4 7 8 11 12 5 15 16 3 2 19 20 6 1 23 24 9 10 27 28 13 14 31 32 17 18 30 29 21 22 26 25
5 3 2 6 1 4 9 10 7 8 13 14 11 12 17 18 15 16 21 22 19 20 25 26 23 24 29 30 27 28 32 31
6 9 10 13 14 1 17 18 2 3 21 22 4 5 25 26 7 8 29 30 11 12 32 31 15 16 28 27 19 20 24 23
7 11 12 15 16 8 19 20 5 4 23 24 3 2 27 28 6 1 31 32 9 10 30 29 13 14 26 25 17 18 22 21
8 5 4 3 2 7 6 1 11 12 9 10 15 16 13 14 19 20 17 18 23 24 21 22 27 28 25 26 31 32 29 30
9 13 14 17 18 10 21 22 1 6 25 26 2 3 29 30 4 5 32 31 7 8 28 27 11 12 24 23 15 16 20 19
10 1 6 2 3 9 4 5 13 14 7 8 17 18 11 12 21 22 15 16 25 26 19 20 29 30 23 24 32 31 27 28
11 15 16 19 20 12 23 24 8 7 27 28 5 4 31 32 3 2 30 29 6 1 26 25 9 10 22 21 13 14 18 17
12 8 7 5 4 11 3 2 15 16 6 1 19 20 9 10 23 24 13 14 27 28 17 18 31 32 21 22 30 29 25 26
13 17 18 21 22 14 25 26 10 9 29 30 1 6 32 31 2 3 28 27 4 5 24 23 7 8 20 19 11 12 16 15
14 10 9 1 6 13 2 3 17 18 4 5 21 22 7 8 25 26 11 12 29 30 15 16 32 31 19 20 28 27 23 24
15 19 20 23 24 16 27 28 12 11 31 32 8 7 30 29 5 4 26 25 3 2 22 21 6 1 18 17 9 10 14 13
16 12 11 8 7 15 5 4 19 20 3 2 23 24 6 1 27 28 9 10 31 32 13 14 30 29 17 18 26 25 21 22
17 21 22 25 26 18 29 30 14 13 32 31 10 9 28 27 1 6 24 23 2 3 20 19 4 5 16 15 7 8 12 11
18 14 13 10 9 17 1 6 21 22 2 3 25 26 4 5 29 30 7 8 32 31 11 12 28 27 15 16 24 23 19 20
19 23 24 27 28 20 31 32 16 15 30 29 12 11 26 25 8 7 22 21 5 4 18 17 3 2 14 13 6 1 10 9
20 16 15 12 11 19 8 7 23 24 5 4 27 28 3 2 31 32 6 1 30 29 9 10 26 25 13 14 22 21 17 18
21 25 26 29 30 22 32 31 18 17 28 27 14 13 24 23 10 9 20 19 1 6 16 15 2 3 12 11 4 5 8 7
22 18 17 14 13 21 10 9 25 26 1 6 29 30 2 3 32 31 4 5 28 27 7 8 24 23 11 12 20 19 15 16
23 27 28 31 32 24 30 29 20 19 26 25 16 15 22 21 12 11 18 17 8 7 14 13 5 4 10 9 3 2 1 6
24 20 19 16 15 23 12 11 27 28 8 7 31 32 5 4 30 29 3 2 26 25 6 1 22 21 9 10 18 17 13 14
25 29 30 32 31 26 28 27 22 21 24 23 18 17 20 19 14 13 16 15 10 9 12 11 1 6 8 7 2 3 5 4
26 22 21 18 17 25 14 13 29 30 10 9 32 31 1 6 28 27 2 3 24 23 4 5 20 19 7 8 16 15 11 12
27 31 32 30 29 28 26 25 24 23 22 21 20 19 18 17 16 15 14 13 12 11 10 9 8 7 1 6 5 4 2 3
28 24 23 20 19 27 16 15 31 32 12 11 30 29 8 7 26 25 5 4 22 21 3 2 18 17 6 1 14 13 9 10
29 32 31 28 27 30 24 23 26 25 20 19 22 21 16 15 18 17 12 11 14 13 8 7 10 9 5 4 1 6 3 2
30 26 25 22 21 29 18 17 32 31 14 13 28 27 10 9 24 23 1 6 20 19 2 3 16 15 4 5 12 11 7 8
31 30 29 26 25 32 22 21 28 27 18 17 24 23 14 13 20 19 10 9 16 15 1 6 12 11 2 3 8 7 4 5
32 28 27 24 23 31 20 19 30 29 16 15 26 25 12 11 22 21 8 7 18 17 5 4 14 13 3 2 10 9 6 1
2 3
)grp"},
    {"Q32", 32, R"grp(# Q32: generalised quaternion of order 32
table 32 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32
2 4 5 8 9 3 10 14 15 16 6 7 17 21 22 23 24 11 12 13 19 28 29 30 18 20 1 26 32 25 27 31
3 6 7 11 12 10 13 18 19 20 16 17 1 25 21 26 27 23 24 2 30 14 28 31 29 4 5 8 22 32 9 15
4 8 9 14 15 5 16 21 22 23 3 10 24 19 28 29 30 6 7 17 12 26 32 25 11 13 2 20 31 18 1 27
5 3 10 6 7 16 17 11 12 13 23 24 2 18 19 20 1 29 30 4 25 21 26 27 32 8 9 14 28 31 15 22
6 11 12 18 19 7 20 25 21 26 10 13 27 30 14 28 31 16 17 1 24 8 22 32 23 2 3 4 15 29 5 9
7 10 13 16 17 20 1 23 24 2 26 27 3 29 30 4 5 28 31 6 32 25 8 9 22 11 12 18 14 15 19 21
8 14 15 21 22 9 23 19 28 29 5 16 30 12 26 32 25 3 10 24 7 20 31 18 6 17 4 13 27 11 2 1
9 5 16 3 10 23 24 6 7 17 29 30 4 11 12 13 2 32 25 8 18 19 20 1 31 14 15 21 26 27 22 28
10 16 17 23 24 13 2 29 30 4 20 1 5 32 25 8 9 26 27 3 31 18 14 15 28 6 7 11 21 22 12 19
11 18 19 25 21 12 26 30 14 28 7 20 31 24 8 22 32 10 13 27 17 4 15 29 16 1 6 2 9 23 3 5
12 7 20 10 13 26 27 16 17 1 28 31 6 23 24 2 3 22 32 11 29 30 4 5 15 18 19 25 8 9 21 14
13 20 1 26 27 2 3 28 31 6 4 5 7 22 32 11 12 8 9 10 15 29 18 19 14 16 17 23 25 21 24 30
14 21 22 19 28 15 29 12 26 32 9 23 25 7 20 31 18 5 16 30 10 13 27 11 3 24 8 17 1 6 4 2
15 9 23 5 16 29 30 3 10 24 32 25 8 6 7 17 4 31 18 14 11 12 13 2 27 21 22 19 20 1 28 26
16 23 24 29 30 17 4 32 25 8 13 2 9 31 18 14 15 20 1 5 27 11 21 22 26 3 10 6 19 28 7 12
17 13 2 20 1 4 5 26 27 3 8 9 10 28 31 6 7 14 15 16 22 32 11 12 21 23 24 29 18 19 30 25
18 25 21 30 14 19 28 24 8 22 12 26 32 17 4 15 29 7 20 31 13 2 9 23 10 27 11 1 5 16 6 3
19 12 26 7 20 28 31 10 13 27 22 32 11 16 17 1 6 15 29 18 23 24 2 3 9 25 21 30 4 5 14 8
20 26 27 28 31 1 6 22 32 11 2 3 12 15 29 18 19 4 5 7 9 23 25 21 8 10 13 16 30 14 17 24
21 19 28 12 26 22 32 7 20 31 15 29 18 10 13 27 11 9 23 25 16 17 1 6 5 30 14 24 2 3 8 4
22 15 29 9 23 32 25 5 16 30 31 18 14 3 10 24 8 27 11 21 6 7 17 4 1 19 28 12 13 2 26 20
23 29 30 32 25 24 8 31 18 14 17 4 15 27 11 21 22 13 2 9 1 6 19 28 20 5 16 3 12 26 10 7
24 17 4 13 2 8 9 20 1 5 14 15 16 26 27 3 10 21 22 23 28 31 6 7 19 29 30 32 11 12 25 18
25 30 14 24 8 21 22 17 4 15 19 28 29 13 2 9 23 12 26 32 20 1 5 16 7 31 18 27 3 10 11 6
26 28 31 22 32 27 11 15 29 18 1 6 19 9 23 25 21 2 3 12 5 16 30 14 4 7 20 10 24 8 13 17
27 1 6 2 3 11 12 4 5 7 18 19 20 8 9 10 13 25 21 26 14 15 16 17 30 28 31 22 23 24 32 29
28 22 32 15 29 31 18 9 23 25 27 11 21 5 16 30 14 1 6 19 3 10 24 8 2 12 26 7 17 4 20 13
29 32 25 31 18 30 14 27 11 21 24 8 22 1 6 19 28 17 4 15 2 3 12 26 13 9 23 5 7 20 16 10
30 24 8 17 4 14 15 13 2 9 21 22 23 20 1 5 16 19 28 29 26 27 3 10 12 32 25 31 6 7 18 11
31 27 11 1 6 18 19 2 3 12 25 21 26 4 5 7 20 30 14 28 8 9 10 13 24 22 32 15 16 17 29 23
32 31 18 27 11 25 21 1 6 19 30 14 28 2 3 12 26 24 8 22 4 5 7 20 17 15 29 9 10 13 23 16
2 3
)grp"},
    {"SD32", 32, R"grp(# SD32: semidihedral of order 32
table 32 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32
2 4 5 7 8 9 12 13 14 15 16 19 20 21 3 22 23 24 26 17 27 28 6 1 29 11 25 31 10 32 30 18
3 6 1 10 11 2 17 18 16 4 5 25 19 24 22 9 7 8 13 30 26 15 28 14 12 21 32 23 31 20 29 27
4 7 8 12 13 14 19 20 21 3 22 26 17 27 5 28 6 1 11 23 25 31 9 2 10 16 29 30 15 18 32 24
5 9 2 15 16 4 23 24 22 7 8 29 26 1 28 14 12 13 20 32 11 3 31 21 19 27 18 6 30 17 10 25
6 10 11 17 18 16 25 19 24 22 9 13 30 26 1 15 28 14 21 7 32 23 2 3 31 5 12 29 4 27 20 8
7 12 13 19 20 21 26 17 27 5 28 11 23 25 8 31 9 2 16 6 29 30 14 4 15 22 10 32 3 24 18 1
8 14 4 3 22 7 6 1 28 12 13 10 11 2 31 21 19 20 17 18 16 5 30 27 26 25 24 9 32 23 15 29
9 15 16 23 24 22 29 26 1 28 14 20 32 11 2 3 31 21 27 12 18 6 4 5 30 8 19 10 7 25 17 13
10 17 18 25 19 24 13 30 26 1 15 21 7 32 11 23 2 3 5 28 12 29 16 6 4 9 31 20 22 8 27 14
11 16 6 22 9 10 28 14 15 17 18 31 21 3 23 24 25 19 30 27 5 1 29 26 13 32 8 2 20 7 4 12
12 19 20 26 17 27 11 23 25 8 31 16 6 29 13 30 14 4 22 9 10 32 21 7 3 28 15 18 5 1 24 2
13 21 7 5 28 12 9 2 31 19 20 15 16 4 30 27 26 17 23 24 22 8 32 25 11 29 1 14 18 6 3 10
14 3 22 6 1 28 10 11 2 31 21 17 18 16 4 5 30 27 25 19 24 9 7 8 32 13 26 15 12 29 23 20
15 23 24 29 26 1 20 32 11 2 3 27 12 18 16 6 4 5 8 31 19 10 22 9 7 14 30 17 28 13 25 21
16 22 9 28 14 15 31 21 3 23 24 30 27 5 6 1 29 26 32 25 8 2 10 11 20 18 13 4 17 12 7 19
17 25 19 13 30 26 21 7 32 11 23 5 28 12 18 29 16 6 9 2 31 20 24 10 22 15 4 27 1 14 8 3
18 24 10 1 15 17 2 3 23 25 19 4 5 6 29 26 13 30 7 8 9 11 20 32 21 12 14 16 27 28 22 31
19 26 17 11 23 25 16 6 29 13 30 22 9 10 20 32 21 7 28 14 15 18 27 12 5 31 3 24 8 2 1 4
20 27 12 8 31 19 14 4 30 26 17 3 22 7 32 25 11 23 6 1 28 13 18 29 16 10 2 21 24 9 5 15
21 5 28 9 2 31 15 16 4 30 27 23 24 22 7 8 32 25 29 26 1 14 12 13 18 20 11 3 19 10 6 17
22 28 14 31 21 3 30 27 5 6 1 32 25 8 9 2 10 11 18 29 13 4 15 16 17 24 20 7 23 19 12 26
23 29 26 20 32 11 27 12 18 16 6 8 31 19 24 10 22 9 14 4 30 17 1 15 28 3 7 25 2 21 13 5
24 1 15 2 3 23 4 5 6 29 26 7 8 9 10 11 20 32 12 13 14 16 17 18 27 19 21 22 25 31 28 30
25 13 30 21 7 32 5 28 12 18 29 9 2 31 19 20 24 10 15 16 4 27 26 17 1 23 22 8 11 3 14 6
26 11 23 16 6 29 22 9 10 20 32 28 14 15 17 18 27 12 31 21 3 24 25 19 8 30 5 1 13 4 2 7
27 8 31 14 4 30 3 22 7 32 25 6 1 28 12 13 18 29 10 11 2 21 19 20 24 17 16 5 26 15 9 23
28 31 21 30 27 5 32 25 8 9 2 18 29 13 14 4 15 16 24 10 20 7 3 22 23 1 17 12 6 26 19 11
29 20 32 27 12 18 8 31 19 24 10 14 4 30 26 17 1 15 3 22 7 25 11 23 2 6 28 13 16 5 21 9
30 32 25 18 29 13 24 10 20 21 7 1 15 17 27 12 5 28 2 3 23 19 8 31 9 4 6 26 14 16 11 22
31 30 27 32 25 8 18 29 13 14 4 24 10 20 21 7 3 22 1 15 17 12 5 28 6 2 23 19 9 11 26 16
32 18 29 24 10 20 1 15 17 27 12 2 3 23 25 19 8 31 4 5 6 26 13 30 14 7 9 11 21 22 16 28
2 3
)grp"},
    {"M32", 32, R"grp(# M32: modular of order 32
table 32 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32
2 4 5 7 8 9 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 10 31 3 32 6 1
3 6 1 8 10 2 13 4 14 5 16 18 7 9 21 11 22 12 24 26 15 17 29 19 30 20 31 32 23 25 27 28
4 7 8 11 12 13 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 10 31 3 32 14 6 5 1 9 2
5 9 2 12 14 4 17 7 18 8 20 22 11 13 25 15 26 16 28 30 19 21 3 23 32 24 6 1 27 29 10 31
6 8 10 13 4 14 16 18 7 9 21 11 22 12 24 26 15 17 29 19 30 20 31 32 23 25 5 27 1 28 2 3
7 11 12 15 16 17 19 20 21 22 23 24 25 26 27 28 29 30 10 31 3 32 14 6 5 1 18 9 8 2 13 4
8 13 4 16 18 7 21 11 22 12 24 26 15 17 29 19 30 20 31 32 23 25 5 27 1 28 9 2 10 3 14 6
9 12 14 17 7 18 20 22 11 13 25 15 26 16 28 30 19 21 3 23 32 24 6 1 27 29 8 10 2 31 4 5
10 14 6 18 9 8 22 13 12 4 26 17 16 7 30 21 20 11 32 25 24 15 1 29 28 19 2 3 31 23 5 27
11 15 16 19 20 21 23 24 25 26 27 28 29 30 10 31 3 32 14 6 5 1 18 9 8 2 22 13 12 4 17 7
12 17 7 20 22 11 25 15 26 16 28 30 19 21 3 23 32 24 6 1 27 29 8 10 2 31 13 4 14 5 18 9
13 16 18 21 11 22 24 26 15 17 29 19 30 20 31 32 23 25 5 27 1 28 9 2 10 3 12 14 4 6 7 8
14 18 9 22 13 12 26 17 16 7 30 21 20 11 32 25 24 15 1 29 28 19 2 3 31 23 4 5 6 27 8 10
15 19 20 23 24 25 27 28 29 30 10 31 3 32 14 6 5 1 18 9 8 2 22 13 12 4 26 17 16 7 21 11
16 21 11 24 26 15 29 19 30 20 31 32 23 25 5 27 1 28 9 2 10 3 12 14 4 6 17 7 18 8 22 13
17 20 22 25 15 26 28 30 19 21 3 23 32 24 6 1 27 29 8 10 2 31 13 4 14 5 16 18 7 9 11 12
18 22 13 26 17 16 30 21 20 11 32 25 24 15 1 29 28 19 2 3 31 23 4 5 6 27 7 8 9 10 12 14
19 23 24 27 28 29 10 31 3 32 14 6 5 1 18 9 8 2 22 13 12 4 26 17 16 7 30 21 20 11 25 15
20 25 15 28 30 19 3 23 32 24 6 1 27 29 8 10 2 31 13 4 14 5 16 18 7 9 21 11 22 12 26 17
21 24 26 29 19 30 31 32 23 25 5 27 1 28 9 2 10 3 12 14 4 6 17 7 18 8 20 22 11 13 15 16
22 26 17 30 21 20 32 25 24 15 1 29 28 19 2 3 31 23 4 5 6 27 7 8 9 10 11 12 13 14 16 18
23 27 28 10 31 3 14 6 5 1 18 9 8 2 22 13 12 4 26 17 16 7 30 21 20 11 32 25 24 15 29 19
24 29 19 31 32 23 5 27 1 28 9 2 10 3 12 14 4 6 17 7 18 8 20 22 11 13 25 15 26 16 30 21
25 28 30 3 23 32 6 1 27 29 8 10 2 31 13 4 14 5 16 18 7 9 21 11 22 12 24 26 15 17 19 20
26 30 21 32 25 24 1 29 28 19 2 3 31 23 4 5 6 27 7 8 9 10 11 12 13 14 15 16 17 18 20 22
27 10 31 14 6 5 18 9 8 2 22 13 12 4 26 17 16 7 30 21 20 11 32 25 24 15 1 29 28 19 3 23
28 3 23 6 1 27 8 10 2 31 13 4 14 5 16 18 7 9 21 11 22 12 24 26 15 17 29 19 30 20 32 25
29 31 32 5 27 1 9 2 10 3 12 14 4 6 17 7 18 8 20 22 11 13 25 15 26 16 28 30 19 21 23 24
30 32 25 1 29 28 2 3 31 23 4 5 6 27 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 24 26
31 5 27 9 2 10 12 14 4 6 17 7 18 8 20 22 11 13 25 15 26 16 28 30 19 21 3 23 32 24 1 29
32 1 29 2 3 31 4 5 6 27 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 28 30
2 3
)grp"},
    {"C4wrC2", 32, R"grp(# C4wrC2: wreath product C4 wr C2
table 32 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32
2 4 5 7 8 9 1 12 13 14 15 3 18 19 20 21 22 6 24 25 26 27 28 10 11 29 30 31 16 17 32 23
3 6 1 10 11 2 16 17 15 4 5 23 22 20 9 7 8 28 27 14 25 13 12 31 21 30 19 18 32 26 24 29
4 7 8 1 12 13 2 3 18 19 20 5 6 24 25 26 27 9 10 11 29 30 31 14 15 16 17 32 21 22 23 28
5 9 2 14 15 4 21 22 20 7 8 28 27 25 13 1 12 31 30 19 11 18 3 32 26 17 24 6 23 29 10 16
6 10 11 16 17 15 3 23 22 20 9 1 28 27 14 25 13 2 31 21 30 19 18 4 5 32 26 24 7 8 29 12
7 1 12 2 3 18 4 5 6 24 25 8 9 10 11 29 30 13 14 15 16 17 32 19 20 21 22 23 26 27 28 31
8 13 4 19 20 7 26 27 25 1 12 31 30 11 18 2 3 32 17 24 15 6 5 23 29 22 10 9 28 16 14 21
9 14 15 21 22 20 5 28 27 25 13 2 31 30 19 11 18 4 32 26 17 24 6 7 8 23 29 10 1 12 16 3
10 16 17 3 23 22 6 1 28 27 14 11 2 31 21 30 19 15 4 5 32 26 24 20 9 7 8 29 25 13 12 18
11 15 6 20 9 10 25 13 14 16 17 18 19 21 22 3 23 24 26 27 5 28 1 29 30 8 31 2 12 32 4 7
12 18 7 24 25 1 29 30 11 2 3 32 17 15 6 4 5 23 22 10 20 9 8 28 16 27 14 13 31 21 19 26
13 19 20 26 27 25 8 31 30 11 18 4 32 17 24 15 6 7 23 29 22 10 9 1 12 28 16 14 2 3 21 5
14 21 22 5 28 27 9 2 31 30 19 15 4 32 26 17 24 20 7 8 23 29 10 25 13 1 12 16 11 18 3 6
15 20 9 25 13 14 11 18 19 21 22 6 24 26 27 5 28 10 29 30 8 31 2 16 17 12 32 4 3 23 7 1
16 3 23 6 1 28 10 11 2 31 21 17 15 4 5 32 26 22 20 9 7 8 29 27 14 25 13 12 30 19 18 24
17 22 10 27 14 16 30 19 21 3 23 24 26 5 28 6 1 29 8 31 9 2 11 12 32 13 4 15 18 7 20 25
18 24 25 29 30 11 12 32 17 15 6 7 23 22 10 20 9 1 28 16 27 14 13 2 3 31 21 19 4 5 26 8
19 26 27 8 31 30 13 4 32 17 24 20 7 23 29 22 10 25 1 12 28 16 14 11 18 2 3 21 15 6 5 9
20 25 13 11 18 19 15 6 24 26 27 9 10 29 30 8 31 14 16 17 12 32 4 21 22 3 23 7 5 28 1 2
21 5 28 9 2 31 14 15 4 32 26 22 20 7 8 23 29 27 25 13 1 12 16 30 19 11 18 3 17 24 6 10
22 27 14 30 19 21 17 24 26 5 28 10 29 8 31 9 2 16 12 32 13 4 15 3 23 18 7 20 6 1 25 11
23 28 16 31 21 3 32 26 5 6 1 29 8 9 2 10 11 12 13 4 14 15 17 18 7 19 20 22 24 25 27 30
24 29 30 12 32 17 18 7 23 22 10 25 1 28 16 27 14 11 2 3 31 21 19 15 6 4 5 26 20 9 8 13
25 11 18 15 6 24 20 9 10 29 30 13 14 16 17 12 32 19 21 22 3 23 7 26 27 5 28 1 8 31 2 4
26 8 31 13 4 32 19 20 7 23 29 27 25 1 12 28 16 30 11 18 2 3 21 17 24 15 6 5 22 10 9 14
27 30 19 17 24 26 22 10 29 8 31 14 16 12 32 13 4 21 3 23 18 7 20 5 28 6 1 25 9 2 11 15
28 31 21 32 26 5 23 29 8 9 2 16 12 13 4 14 15 3 18 7 19 20 22 6 1 24 25 27 10 11 30 17
29 12 32 18 7 23 24 25 1 28 16 30 11 2 3 31 21 17 15 6 4 5 26 22 10 20 9 8 27 14 13 19
30 17 24 22 10 29 27 14 16 12 32 19 21 3 23 18 7 26 5 28 6 1 25 8 31 9 2 11 13 4 15 20
31 32 26 23 29 8 28 16 12 13 4 21 3 18 7 19 20 5 6 1 24 25 27 9 2 10 11 30 14 15 17 22
32 23 29 28 16 12 31 21 3 18 7 26 5 6 1 24 25 8 9 2 10 11 30 13 4 14 15 17 19 20 22 27
2 3
)grp"},
    {"C8xC4", 32, R"grp(# C8xC4: C8 x C4
table 32 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32
2 4 5 7 8 9 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 1 27 28 29 3 30 31 6 32 10
3 5 6 8 9 10 12 13 14 1 16 17 18 2 20 21 22 4 24 25 26 7 27 28 29 11 30 31 15 32 19 23
4 7 8 11 12 13 15 16 17 18 19 20 21 22 23 24 25 26 1 27 28 29 2 3 30 31 5 6 32 9 10 14
5 8 9 12 13 14 16 17 18 2 20 21 22 4 24 25 26 7 27 28 29 11 3 30 31 15 6 32 19 10 23 1
6 9 10 13 14 1 17 18 2 3 21 22 4 5 25 26 7 8 28 29 11 12 30 31 15 16 32 19 20 23 24 27
7 11 12 15 16 17 19 20 21 22 23 24 25 26 1 27 28 29 2 3 30 31 4 5 6 32 8 9 10 13 14 18
8 12 13 16 17 18 20 21 22 4 24 25 26 7 27 28 29 11 3 30 31 15 5 6 32 19 9 10 23 14 1 2
9 13 14 17 18 2 21 22 4 5 25 26 7 8 28 29 11 12 30 31 15 16 6 32 19 20 10 23 24 1 27 3
10 14 1 18 2 3 22 4 5 6 26 7 8 9 29 11 12 13 31 15 16 17 32 19 20 21 23 24 25 27 28 30
11 15 16 19 20 21 23 24 25 26 1 27 28 29 2 3 30 31 4 5 6 32 7 8 9 10 12 13 14 17 18 22
12 16 17 20 21 22 24 25 26 7 27 28 29 11 3 30 31 15 5 6 32 19 8 9 10 23 13 14 1 18 2 4
13 17 18 21 22 4 25 26 7 8 28 29 11 12 30 31 15 16 6 32 19 20 9 10 23 24 14 1 27 2 3 5
14 18 2 22 4 5 26 7 8 9 29 11 12 13 31 15 16 17 32 19 20 21 10 23 24 25 1 27 28 3 30 6
15 19 20 23 24 25 1 27 28 29 2 3 30 31 4 5 6 32 7 8 9 10 11 12 13 14 16 17 18 21 22 26
16 20 21 24 25 26 27 28 29 11 3 30 31 15 5 6 32 19 8 9 10 23 12 13 14 1 17 18 2 22 4 7
17 21 22 25 26 7 28 29 11 12 30 31 15 16 6 32 19 20 9 10 23 24 13 14 1 27 18 2 3 4 5 8
18 22 4 26 7 8 29 11 12 13 31 15 16 17 32 19 20 21 10 23 24 25 14 1 27 28 2 3 30 5 6 9
19 23 24 1 27 28 2 3 30 31 4 5 6 32 7 8 9 10 11 12 13 14 15 16 17 18 20 21 22 25 26 29
20 24 25 27 28 29 3 30 31 15 5 6 32 19 8 9 10 23 12 13 14 1 16 17 18 2 21 22 4 26 7 11
21 25 26 28 29 11 30 31 15 16 6 32 19 20 9 10 23 24 13 14 1 27 17 18 2 3 22 4 5 7 8 12
22 26 7 29 11 12 31 15 16 17 32 19 20 21 10 23 24 25 14 1 27 28 18 2 3 30 4 5 6 8 9 13
23 1 27 2 3 30 4 5 6 32 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 24 25 26 28 29 31
24 27 28 3 30 31 5 6 32 19 8 9 10 23 12 13 14 1 16 17 18 2 20 21 22 4 25 26 7 29 11 15
25 28 29 30 31 15 6 32 19 20 9 10 23 24 13 14 1 27 17 18 2 3 21 22 4 5 26 7 8 11 12 16
26 29 11 31 15 16 32 19 20 21 10 23 24 25 14 1 27 28 18 2 3 30 22 4 5 6 7 8 9 12 13 17
27 3 30 5 6 32 8 9 10 23 12 13 14 1 16 17 18 2 20 21 22 4 24 25 26 7 28 29 11 31 15 19
28 30 31 6 32 19 9 10 23 24 13 14 1 27 17 18 2 3 21 22 4 5 25 26 7 8 29 11 12 15 16 20
29 31 15 32 19 20 10 23 24 25 14 1 27 28 18 2 3 30 22 4 5 6 26 7 8 9 11 12 13 16 17 21
30 6 32 9 10 23 13 14 1 27 17 18 2 3 21 22 4 5 25 26 7 8 28 29 11 12 31 15 16 19 20 24
31 32 19 10 23 24 14 1 27 28 18 2 3 30 22 4 5 6 26 7 8 9 29 11 12 13 15 16 17 20 21 25
32 10 23 14 1 27 18 2 3 30 22 4 5 6 26 7 8 9 29 11 12 13 31 15 16 17 19 20 21 24 25 28
2 3
)grp"},
    {"C2xD16", 32, R"grp(# C2xD16: C2 x dihedral of order 16
table 32 3
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32
2 1 5 6 3 4 10 11 12 7 8 9 17 18 19 20 13 14 15 16 25 26 27 28 21 22 23 24 31 32 29 30
3 5 7 8 10 11 13 14 4 17 18 6 21 22 9 1 25 26 12 2 29 30 15 16 31 32 19 20 24 23 28 27
4 6 9 1 12 2 15 16 3 19 20 5 23 24 7 8 27 28 10 11 30 29 13 14 32 31 17 18 22 21 26 25
5 3 10 11 7 8 17 18 6 13 14 4 25 26 12 2 21 22 9 1 31 32 19 20 29 30 15 16 28 27 24 23
6 4 12 2 9 1 19 20 5 15 16 3 27 28 10 11 23 24 7 8 32 31 17 18 30 29 13 14 26 25 22 21
7 10 13 14 17 18 21 22 8 25 26 11 29 30 4 3 31 32 6 5 24 23 9 1 28 27 12 2 16 15 20 19
8 11 4 3 6 5 9 1 7 12 2 10 15 16 13 14 19 20 17 18 23 24 21 22 27 28 25 26 30 29 32 31
9 12 15 16 19 20 23 24 1 27 28 2 30 29 3 4 32 31 5 6 22 21 7 8 26 25 10 11 14 13 18 17
10 7 17 18 13 14 25 26 11 21 22 8 31 32 6 5 29 30 4 3 28 27 12 2 24 23 9 1 20 19 16 15
11 8 6 5 4 3 12 2 10 9 1 7 19 20 17 18 15 16 13 14 27 28 25 26 23 24 21 22 32 31 30 29
12 9 19 20 15 16 27 28 2 23 24 1 32 31 5 6 30 29 3 4 26 25 10 11 22 21 7 8 18 17 14 13
13 17 21 22 25 26 29 30 14 31 32 18 24 23 8 7 28 27 11 10 16 15 4 3 20 19 6 5 1 9 2 12
14 18 8 7 11 10 4 3 13 6 5 17 9 1 21 22 12 2 25 26 15 16 29 30 19 20 31 32 23 24 27 28
15 19 23 24 27 28 30 29 16 32 31 20 22 21 1 9 26 25 2 12 14 13 3 4 18 17 5 6 8 7 11 10
16 20 1 9 2 12 3 4 15 5 6 19 7 8 23 24 10 11 27 28 13 14 30 29 17 18 32 31 21 22 25 26
17 13 25 26 21 22 31 32 18 29 30 14 28 27 11 10 24 23 8 7 20 19 6 5 16 15 4 3 2 12 1 9
18 14 11 10 8 7 6 5 17 4 3 13 12 2 25 26 9 1 21 22 19 20 31 32 15 16 29 30 27 28 23 24
19 15 27 28 23 24 32 31 20 30 29 16 26 25 2 12 22 21 1 9 18 17 5 6 14 13 3 4 11 10 8 7
20 16 2 12 1 9 5 6 19 3 4 15 10 11 27 28 7 8 23 24 17 18 32 31 13 14 30 29 25 26 21 22
21 25 29 30 31 32 24 23 22 28 27 26 16 15 14 13 20 19 18 17 1 9 8 7 2 12 11 10 3 4 5 6
22 26 14 13 18 17 8 7 21 11 10 25 4 3 29 30 6 5 31 32 9 1 24 23 12 2 28 27 15 16 19 20
23 27 30 29 32 31 22 21 24 26 25 28 14 13 16 15 18 17 20 19 8 7 1 9 11 10 2 12 4 3 6 5
24 28 16 15 20 19 1 9 23 2 12 27 3 4 30 29 5 6 32 31 7 8 22 21 10 11 26 25 13 14 17 18
25 21 31 32 29 30 28 27 26 24 23 22 20 19 18 17 16 15 14 13 2 12 11 10 1 9 8 7 5 6 3 4
26 22 18 17 14 13 11 10 25 8 7 21 6 5 31 32 4 3 29 30 12 2 28 27 9 1 24 23 19 20 15 16
27 23 32 31 30 29 26 25 28 22 21 24 18 17 20 19 14 13 16 15 11 10 2 12 8 7 1 9 6 5 4 3
28 24 20 19 16 15 2 12 27 1 9 23 5 6 32 31 3 4 30 29 10 11 26 25 7 8 22 21 17 18 13 14
29 31 24 23 28 27 16 15 30 20 19 32 1 9 22 21 2 12 26 25 3 4 14 13 5 6 18 17 7 8 10 11
30 32 22 21 26 25 14 13 29 18 17 31 8 7 24 23 11 10 28 27 4 3 16 15 6 5 20 19 9 1 12 2
31 29 28 27 24 23 20 19 32 16 15 30 2 12 26 25 1 9 22 21 5 6 18 17 3 4 14 13 10 11 7 8
32 30 26 25 22 21 18 17 31 14 13 29 11 10 28 27 8 7 24 23 6 5 20 19 4 3 16 15 12 2 9 1
2 3 4
)grp"},
    {"C2wrC4", 64, R"grp(# C2wrC4: wreath product C2 wr C4, order 64
table 64 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32 33 34 35 36 37 38 39 40 41 42 43 44 45 46 47 48 49 50 51 52 53 54 55 56 57 58 59 60 61 62 63 64
2 1 4 3 7 8 5 6 12 13 14 9 10 11 19 20 21 22 15 16 17 18 29 30 31 32 33 34 23 24 25 26 27 28 41 42 43 44 45 46 35 36 37 38 39 40 52 53 54 55 56 47 48 49 50 51 60 61 62 57 58 59 64 63
3 5 6 9 10 11 15 16 17 18 1 23 24 25 26 27 28 2 35 36 37 31 38 33 39 34 40 4 47 42 48 43 49 7 44 50 45 46 51 8 52 57 53 54 58 12 55 59 13 56 14 60 63 19 61 20 62 21 22 64 29 30 32 41
4 7 8 12 13 14 19 20 21 22 2 29 30 31 32 33 34 1 41 42 43 25 44 27 45 28 46 3 52 36 53 37 54 5 38 55 39 40 56 6 47 60 48 49 61 9 50 62 10 51 11 57 64 15 58 16 59 17 18 63 23 24 26 35
5 3 9 6 15 16 10 11 23 24 25 17 18 1 35 36 37 31 26 27 28 2 47 42 48 43 49 7 38 33 39 34 40 4 52 57 53 54 58 12 44 50 45 46 51 8 60 63 19 61 20 55 59 13 56 14 64 29 30 62 21 22 41 32
6 10 11 17 18 1 26 27 28 2 3 38 33 39 34 40 4 5 44 50 45 48 46 49 51 7 8 9 55 57 59 53 13 15 54 56 58 12 14 16 60 62 63 19 21 23 61 22 24 20 25 64 32 35 29 36 30 37 31 41 47 42 43 52
7 4 12 8 19 20 13 14 29 30 31 21 22 2 41 42 43 25 32 33 34 1 52 36 53 37 54 5 44 27 45 28 46 3 47 60 48 49 61 9 38 55 39 40 56 6 57 64 15 58 16 50 62 10 51 11 63 23 24 59 17 18 35 26
8 13 14 21 22 2 32 33 34 1 4 44 27 45 28 46 3 7 38 55 39 53 40 54 56 5 6 12 50 60 62 48 10 19 49 51 61 9 11 20 57 59 64 15 17 29 58 18 30 16 31 63 26 41 23 42 24 43 25 35 52 36 37 47
9 15 16 23 24 25 35 36 37 31 5 47 42 48 43 49 7 3 52 57 53 39 54 40 58 4 12 6 60 50 63 45 19 10 46 61 51 8 20 11 55 64 59 13 29 17 56 30 18 14 1 62 41 26 21 27 22 28 2 32 38 33 34 44
10 6 17 11 26 27 18 1 38 33 39 28 2 3 44 50 45 48 34 40 4 5 55 57 59 53 13 15 46 49 51 7 8 9 60 62 63 19 21 23 54 56 58 12 14 16 64 32 35 29 36 61 22 24 20 25 41 47 42 30 37 31 52 43
11 18 1 28 2 3 34 40 4 5 6 46 49 51 7 8 9 10 54 56 58 59 12 13 14 15 16 17 61 62 22 63 24 26 19 20 21 23 25 27 64 30 32 35 37 38 29 31 33 36 39 41 43 44 47 50 42 45 48 52 55 57 53 60
12 19 20 29 30 31 41 42 43 25 7 52 36 53 37 54 5 4 47 60 48 45 49 46 61 3 9 8 57 55 64 39 15 13 40 58 56 6 16 14 50 63 62 10 23 21 51 24 22 11 2 59 35 32 17 33 18 34 1 26 44 27 28 38
13 8 21 14 32 33 22 2 44 27 45 34 1 4 38 55 39 53 28 46 3 7 50 60 62 48 10 19 40 54 56 5 6 12 57 59 64 15 17 29 49 51 61 9 11 20 63 26 41 23 42 58 18 30 16 31 35 52 36 24 43 25 47 37
14 22 2 34 1 4 28 46 3 7 8 40 54 56 5 6 12 13 49 51 61 62 9 10 11 19 20 21 58 59 18 64 30 32 15 16 17 29 31 33 63 24 26 41 43 44 23 25 27 42 45 35 37 38 52 55 36 39 53 47 50 60 48 57
15 9 23 16 35 36 24 25 47 42 48 37 31 5 52 57 53 39 43 49 7 3 60 50 63 45 19 10 54 40 58 4 12 6 55 64 59 13 29 17 46 61 51 8 20 11 62 41 26 21 27 56 30 18 14 1 32 38 33 22 28 2 44 34
16 24 25 37 31 5 43 49 7 3 9 54 40 58 4 12 6 15 46 61 51 63 8 19 20 10 11 23 56 64 30 59 18 35 13 14 29 17 1 36 62 22 41 26 28 47 21 2 42 27 48 32 34 52 38 57 33 53 39 44 60 50 45 55
17 26 27 38 33 39 44 50 45 48 10 55 57 59 53 13 15 6 60 62 63 51 19 8 21 9 23 11 64 56 32 58 35 18 12 29 14 16 36 1 61 41 22 24 47 28 20 42 2 25 3 30 52 34 37 40 31 4 5 43 46 49 7 54
18 11 28 1 34 40 2 3 46 49 51 4 5 6 54 56 58 59 7 8 9 10 61 62 22 63 24 26 12 13 14 15 16 17 64 30 32 35 37 38 19 20 21 23 25 27 41 43 44 47 50 29 31 33 36 39 52 55 57 42 45 48 60 53
19 12 29 20 41 42 30 31 52 36 53 43 25 7 47 60 48 45 37 54 5 4 57 55 64 39 15 13 49 46 61 3 9 8 50 63 62 10 23 21 40 58 56 6 16 14 59 35 32 17 33 51 24 22 11 2 26 44 27 18 34 1 38 28
20 30 31 43 25 7 37 54 5 4 12 49 46 61 3 9 8 19 40 58 56 64 6 15 16 13 14 29 51 63 24 62 22 41 10 11 23 21 2 42 59 18 35 32 34 52 17 1 36 33 53 26 28 47 44 60 27 48 45 38 57 55 39 50
21 32 33 44 27 45 38 55 39 53 13 50 60 62 48 10 19 8 57 59 64 56 15 6 17 12 29 14 63 51 26 61 41 22 9 23 11 20 42 2 58 35 18 30 52 34 16 36 1 31 4 24 47 28 43 46 25 3 7 37 40 54 5 49
22 14 34 2 28 46 1 4 40 54 56 3 7 8 49 51 61 62 5 6 12 13 58 59 18 64 30 32 9 10 11 19 20 21 63 24 26 41 43 44 15 16 17 29 31 33 35 37 38 52 55 23 25 27 42 45 47 50 60 36 39 53 57 48
23 35 36 47 42 48 52 57 53 39 15 60 50 63 45 19 10 9 55 64 59 58 13 12 29 6 17 16 62 61 41 51 26 24 8 21 20 11 27 25 56 32 30 18 38 37 14 33 31 1 5 22 44 43 28 49 2 7 3 34 54 40 4 46
24 16 37 25 43 49 31 5 54 40 58 7 3 9 46 61 51 63 4 12 6 15 56 64 30 59 18 35 8 19 20 10 11 23 62 22 41 26 28 47 13 14 29 17 1 36 32 34 52 38 57 21 2 42 27 48 44 60 50 33 53 39 55 45
25 31 5 7 3 9 4 12 6 15 16 8 19 20 10 11 23 24 13 14 29 30 17 18 1 35 36 37 21 22 2 41 42 43 26 27 28 47 48 49 32 33 34 52 53 54 38 39 40 57 58 44 45 46 60 61 50 51 63 55 56 64 59 62
26 17 38 27 44 50 33 39 55 57 59 45 48 10 60 62 63 51 53 13 15 6 64 56 32 58 35 18 19 8 21 9 23 11 61 41 22 24 47 28 12 29 14 16 36 1 30 52 34 37 40 20 42 2 25 3 43 46 49 31 4 5 54 7
27 33 39 45 48 10 53 13 15 6 17 19 8 21 9 23 11 26 12 29 14 32 16 35 36 18 1 38 20 41 42 22 2 44 24 25 47 28 3 50 30 31 52 34 4 55 37 5 57 40 59 43 7 60 46 62 49 63 51 54 64 56 58 61
28 34 40 46 49 51 54 56 58 59 18 61 62 22 63 24 26 11 64 30 32 14 35 16 37 17 38 1 41 20 43 21 44 2 23 47 25 27 50 3 29 52 31 33 55 4 36 57 5 39 6 42 60 7 45 8 48 9 10 53 12 13 15 19
29 41 42 52 36 53 47 60 48 45 19 57 55 64 39 15 13 12 50 63 62 61 10 9 23 8 21 20 59 58 35 56 32 30 6 17 16 14 33 31 51 26 24 22 44 43 11 27 25 2 7 18 38 37 34 54 1 5 4 28 49 46 3 40
30 20 43 31 37 54 25 7 49 46 61 5 4 12 40 58 56 64 3 9 8 19 51 63 24 62 22 41 6 15 16 13 14 29 59 18 35 32 34 52 10 11 23 21 2 42 26 28 47 44 60 17 1 36 33 53 38 57 55 27 48 45 50 39
31 25 7 5 4 12 3 9 8 19 20 6 15 16 13 14 29 30 10 11 23 24 21 22 2 41 42 43 17 18 1 35 36 37 32 33 34 52 53 54 26 27 28 47 48 49 44 45 46 60 61 38 39 40 57 58 55 56 64 50 51 63 62 59
32 21 44 33 38 55 27 45 50 60 62 39 53 13 57 59 64 56 48 10 19 8 63 51 26 61 41 22 15 6 17 12 29 14 58 35 18 30 52 34 9 23 11 20 42 2 24 47 28 43 46 16 36 1 31 4 37 40 54 25 3 7 49 5
33 27 45 39 53 13 48 10 19 8 21 15 6 17 12 29 14 32 9 23 11 26 20 41 42 22 2 44 16 35 36 18 1 38 30 31 52 34 4 55 24 25 47 28 3 50 43 7 60 46 62 37 5 57 40 59 54 64 56 49 63 51 61 58
34 28 46 40 54 56 49 51 61 62 22 58 59 18 64 30 32 14 63 24 26 11 41 20 43 21 44 2 35 16 37 17 38 1 29 52 31 33 55 4 23 47 25 27 50 3 42 60 7 45 8 36 57 5 39 6 53 12 13 48 9 10 19 15
35 23 47 36 52 57 42 48 60 50 63 53 39 15 55 64 59 58 45 19 10 9 62 61 41 51 26 24 13 12 29 6 17 16 56 32 30 18 38 37 8 21 20 11 27 25 22 44 43 28 49 14 33 31 1 5 34 54 40 2 7 3 46 4
36 42 48 53 39 15 45 19 10 9 23 13 12 29 6 17 16 35 8 21 20 41 11 26 27 24 25 47 14 32 33 30 31 52 18 1 38 37 5 57 22 2 44 43 7 60 28 3 50 49 63 34 4 55 54 64 40 59 58 46 62 61 51 56
37 43 49 54 40 58 46 61 51 63 24 56 64 30 59 18 35 16 62 22 41 20 26 11 28 23 47 25 32 14 34 29 52 31 17 38 1 36 57 5 21 44 2 42 60 7 27 50 3 48 9 33 55 4 53 12 39 6 15 45 8 19 10 13
38 44 50 55 57 59 60 62 63 51 26 64 56 32 58 35 18 17 61 41 22 21 24 23 47 11 28 27 30 29 52 14 34 33 16 37 36 1 40 39 20 43 42 2 46 45 25 49 48 3 10 31 54 53 4 13 5 15 6 7 19 8 9 12
39 48 10 15 6 17 9 23 11 26 27 16 35 36 18 1 38 33 24 25 47 42 28 2 3 44 50 45 37 31 5 52 57 53 34 40 4 55 59 13 43 49 7 60 63 19 46 51 8 62 21 54 58 12 64 29 56 14 32 61 20 41 22 30
40 49 51 58 59 18 63 24 26 11 28 35 16 37 17 38 1 34 23 47 25 43 27 44 50 2 3 46 36 52 57 31 5 54 33 39 55 4 6 56 42 48 60 7 9 61 45 10 62 8 22 53 15 64 12 30 13 32 14 19 41 20 21 29
41 29 52 42 47 60 36 53 57 55 64 48 45 19 50 63 62 61 39 15 13 12 59 58 35 56 32 30 10 9 23 8 21 20 51 26 24 22 44 43 6 17 16 14 33 31 18 38 37 34 54 11 27 25 2 7 28 49 46 1 5 4 40 3
42 36 53 48 45 19 39 15 13 12 29 10 9 23 8 21 20 41 6 17 16 35 14 32 33 30 31 52 11 26 27 24 25 47 22 2 44 43 7 60 18 1 38 37 5 57 34 4 55 54 64 28 3 50 49 63 46 62 61 40 59 58 56 51
43 37 54 49 46 61 40 58 56 64 30 51 63 24 62 22 41 20 59 18 35 16 32 14 34 29 52 31 26 11 28 23 47 25 21 44 2 42 60 7 17 38 1 36 57 5 33 55 4 53 12 27 50 3 48 9 45 8 19 39 6 15 13 10
44 38 55 50 60 62 57 59 64 56 32 63 51 26 61 41 22 21 58 35 18 17 30 29 52 14 34 33 24 23 47 11 28 27 20 43 42 2 46 45 16 37 36 1 40 39 31 54 53 4 13 25 49 48 3 10 7 19 8 5 15 6 12 9
45 53 13 19 8 21 12 29 14 32 33 20 41 42 22 2 44 27 30 31 52 36 34 1 4 38 55 39 43 25 7 47 60 48 28 46 3 50 62 10 37 54 5 57 64 15 40 56 6 59 17 49 61 9 63 23 51 11 26 58 16 35 18 24
46 54 56 61 62 22 64 30 32 14 34 41 20 43 21 44 2 28 29 52 31 37 33 38 55 1 4 40 42 47 60 25 7 49 27 45 50 3 8 51 36 53 57 5 12 58 39 13 59 6 18 48 19 63 9 24 10 26 11 15 35 16 17 23
47 52 57 60 50 63 55 64 59 58 35 62 61 41 51 26 24 23 56 32 30 29 18 17 38 16 37 36 22 21 44 20 43 42 11 28 27 25 49 48 14 34 33 31 54 53 1 40 39 5 15 2 46 45 7 19 3 10 9 4 13 12 6 8
48 39 15 10 9 23 6 17 16 35 36 11 26 27 24 25 47 42 18 1 38 33 37 31 5 52 57 53 28 2 3 44 50 45 43 49 7 60 63 19 34 40 4 55 59 13 54 58 12 64 29 46 51 8 62 21 61 20 41 56 14 32 30 22
49 40 58 51 63 24 59 18 35 16 37 26 11 28 23 47 25 43 17 38 1 34 36 52 57 31 5 54 27 44 50 2 3 46 42 48 60 7 9 61 33 39 55 4 6 56 53 15 64 12 30 45 10 62 8 22 19 41 20 13 32 14 29 21
50 57 59 63 51 26 58 35 18 17 38 24 23 47 11 28 27 44 16 37 36 52 1 34 40 33 39 55 25 43 49 42 48 60 2 3 46 45 10 62 31 5 54 53 15 64 4 6 56 13 32 7 9 61 19 41 8 22 21 12 30 29 14 20
51 59 18 26 11 28 17 38 1 34 40 27 44 50 2 3 46 49 33 39 55 57 4 5 6 54 56 58 45 48 10 60 62 63 7 8 9 61 22 24 53 13 15 64 32 35 12 14 16 30 37 19 21 23 41 47 20 25 43 29 36 52 31 42
52 47 60 57 55 64 50 63 62 61 41 59 58 35 56 32 30 29 51 26 24 23 22 21 44 20 43 42 18 17 38 16 37 36 14 34 33 31 54 53 11 28 27 25 49 48 2 46 45 7 19 1 40 39 5 15 4 13 12 3 10 9 8 6
53 45 19 13 12 29 8 21 20 41 42 14 32 33 30 31 52 36 22 2 44 27 43 25 7 47 60 48 34 1 4 38 55 39 37 54 5 57 64 15 28 46 3 50 62 10 49 61 9 63 23 40 56 6 59 17 58 16 35 51 11 26 24 18
54 46 61 56 64 30 62 22 41 20 43 32 14 34 29 52 31 37 21 44 2 28 42 47 60 25 7 49 33 38 55 1 4 40 36 53 57 5 12 58 27 45 50 3 8 51 48 19 63 9 24 39 13 59 6 18 15 35 16 10 26 11 23 17
55 60 62 64 56 32 61 41 22 21 44 30 29 52 14 34 33 38 20 43 42 47 2 28 46 27 45 50 31 37 54 36 53 57 1 4 40 39 13 59 25 7 49 48 19 63 3 8 51 10 26 5 12 58 15 35 6 18 17 9 24 23 11 16
56 62 22 32 14 34 21 44 2 28 46 33 38 55 1 4 40 54 27 45 50 60 3 7 8 49 51 61 39 53 13 57 59 64 5 6 12 58 18 30 48 10 19 63 26 41 9 11 20 24 43 15 17 29 35 52 16 31 37 23 42 47 25 36
57 50 63 59 58 35 51 26 24 23 47 18 17 38 16 37 36 52 11 28 27 44 25 43 49 42 48 60 1 34 40 33 39 55 31 5 54 53 15 64 2 3 46 45 10 62 7 9 61 19 41 4 6 56 13 32 12 30 29 8 22 21 20 14
58 63 24 35 16 37 23 47 25 43 49 36 52 57 31 5 54 40 42 48 60 50 7 3 9 46 61 51 53 39 15 55 64 59 4 12 6 56 30 18 45 19 10 62 41 26 8 20 11 22 28 13 29 17 32 38 14 1 34 21 27 44 2 33
59 51 26 18 17 38 11 28 27 44 50 1 34 40 33 39 55 57 2 3 46 49 45 48 10 60 62 63 4 5 6 54 56 58 53 13 15 64 32 35 7 8 9 61 22 24 19 21 23 41 47 12 14 16 30 37 29 36 52 20 25 43 42 31
60 55 64 62 61 41 56 32 30 29 52 22 21 44 20 43 42 47 14 34 33 38 31 37 54 36 53 57 2 28 46 27 45 50 25 7 49 48 19 63 1 4 40 39 13 59 5 12 58 15 35 3 8 51 10 26 9 24 23 6 18 17 16 11
61 64 30 41 20 43 29 52 31 37 54 42 47 60 25 7 49 46 36 53 57 55 5 4 12 40 58 56 48 45 19 50 63 62 3 9 8 51 24 22 39 15 13 59 35 32 6 16 14 18 34 10 23 21 26 44 11 2 28 17 33 38 1 27
62 56 32 22 21 44 14 34 33 38 55 2 28 46 27 45 50 60 1 4 40 54 39 53 13 57 59 64 3 7 8 49 51 61 48 10 19 63 26 41 5 6 12 58 18 30 15 17 29 35 52 9 11 20 24 43 23 42 47 16 31 37 36 25
63 58 35 24 23 47 16 37 36 52 57 25 43 49 42 48 60 50 31 5 54 40 53 39 15 55 64 59 7 3 9 46 61 51 45 19 10 62 41 26 4 12 6 56 30 18 13 29 17 32 38 8 20 11 22 28 21 27 44 14 1 34 33 2
64 61 41 30 29 52 20 43 42 47 60 31 37 54 36 53 57 55 25 7 49 46 48 45 19 50 63 62 5 4 12 40 58 56 39 15 13 59 35 32 3 9 8 51 24 22 10 23 21 26 44 6 16 14 18 34 17 33 38 11 2 28 27 1
2 3
)grp"},
    {"C8:C8", 64, R"grp(# C8:C8: metacyclic C8 x| C8, y x y^-1 = x^5
table 64 2
1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32 33 34 35 36 37 38 39 40 41 42 43 44 45 46 47 48 49 50 51 52 53 54 55 56 57 58 59 60 61 62 63 64
2 4 5 8 9 10 11 14 15 16 17 18 19 22 23 3 24 25 26 27 28 31 6 32 7 33 34 35 36 37 40 12 41 13 42 43 44 45 46 1 20 49 21 50 51 52 53 54 29 56 30 57 58 59 60 38 61 39 62 63 47 64 48 55
3 6 7 9 12 11 13 16 17 18 20 19 21 23 25 24 26 27 29 28 30 5 32 34 33 35 36 38 37 39 10 41 43 42 44 45 47 46 48 15 49 51 50 52 53 55 54 1 56 58 57 59 60 22 2 61 63 62 4 31 64 40 8 14
4 8 9 14 15 16 17 22 23 3 24 25 26 31 6 5 32 7 33 34 35 40 10 12 11 41 13 42 43 44 1 18 20 19 49 21 50 51 52 2 27 29 28 56 30 57 58 59 36 38 37 61 39 62 63 45 47 46 64 48 53 55 54 60
5 10 11 15 18 17 19 3 24 25 27 26 28 6 7 32 33 34 36 35 37 9 12 13 41 42 43 45 44 46 16 20 21 49 50 51 53 52 54 23 29 30 56 57 58 60 59 2 38 39 61 62 63 31 4 47 48 64 8 40 55 1 14 22
6 9 12 16 17 18 20 23 25 24 26 27 29 5 32 7 34 33 35 36 38 10 11 41 13 43 42 44 45 47 15 19 49 21 51 50 52 53 55 3 28 56 30 58 57 59 60 22 37 61 39 63 62 4 31 46 64 48 40 8 54 14 1 2
7 11 13 17 19 20 21 24 26 27 28 29 30 32 33 34 35 36 37 38 39 12 41 42 43 44 45 46 47 48 18 49 50 51 52 53 54 55 1 25 56 57 58 59 60 2 22 3 61 62 63 4 31 5 6 64 8 40 9 10 14 15 16 23
8 14 15 22 23 3 24 31 6 5 32 7 33 40 10 9 12 11 41 13 42 1 16 18 17 20 19 49 21 50 2 25 27 26 29 28 56 30 57 4 34 36 35 38 37 61 39 62 43 45 44 47 46 64 48 51 53 52 55 54 58 60 59 63
9 16 17 23 25 24 26 5 32 7 34 33 35 10 11 12 41 13 43 42 44 15 18 19 20 49 21 51 50 52 3 27 28 29 56 30 58 57 59 6 36 37 38 61 39 63 62 4 45 46 47 64 48 40 8 53 54 55 14 1 60 2 22 31
10 15 18 3 24 25 27 6 7 32 33 34 36 9 12 11 13 41 42 43 45 16 17 20 19 21 49 50 51 53 23 26 29 28 30 56 57 58 60 5 35 38 37 39 61 62 63 31 44 47 46 48 64 8 40 52 55 54 1 14 59 22 2 4
11 17 19 24 26 27 28 32 33 34 35 36 37 12 41 13 42 43 44 45 46 18 20 49 21 50 51 52 53 54 25 29 56 30 57 58 59 60 2 7 38 61 39 62 63 4 31 5 47 64 48 8 40 9 10 55 14 1 15 16 22 23 3 6
12 18 20 25 27 26 29 7 34 33 36 35 38 11 13 41 43 42 45 44 47 17 19 21 49 51 50 53 52 55 24 28 30 56 58 57 60 59 22 32 37 39 61 63 62 31 4 6 46 48 64 40 8 10 9 54 1 14 16 15 2 3 23 5
13 20 21 26 29 28 30 34 35 36 38 37 39 41 43 42 44 45 47 46 48 19 49 51 50 52 53 55 54 1 27 56 58 57 59 60 22 2 3 33 61 63 62 4 31 6 5 7 64 40 8 9 10 12 11 14 16 15 17 18 23 25 24 32
14 22 23 31 6 5 32 40 10 9 12 11 41 1 16 15 18 17 20 19 49 2 3 25 24 27 26 29 28 56 4 7 34 33 36 35 38 37 61 8 13 43 42 45 44 47 46 64 21 51 50 53 52 55 54 30 58 57 60 59 39 63 62 48
15 3 24 6 7 32 33 9 12 11 13 41 42 16 17 18 20 19 21 49 50 23 25 26 27 29 28 30 56 57 5 34 35 36 38 37 39 61 62 10 43 44 45 47 46 48 64 8 51 52 53 55 54 1 14 58 59 60 22 2 63 4 31 40
16 23 25 5 32 7 34 10 11 12 41 13 43 15 18 17 19 20 49 21 51 3 24 27 26 28 29 56 30 58 6 33 36 35 37 38 61 39 63 9 42 45 44 46 47 64 48 40 50 53 52 54 55 14 1 57 60 59 2 22 62 31 4 8
17 24 26 32 33 34 35 12 41 13 42 43 44 18 20 19 49 21 50 51 52 25 27 29 28 56 30 57 58 59 7 36 38 37 61 39 62 63 4 11 45 47 46 64 48 8 40 9 53 55 54 14 1 15 16 60 22 2 23 3 31 6 5 10
18 25 27 7 34 33 36 11 13 41 43 42 45 17 19 20 21 49 51 50 53 24 26 28 29 30 56 58 57 60 32 35 37 38 39 61 63 62 31 12 44 46 47 48 64 40 8 10 52 54 55 1 14 16 15 59 2 22 3 23 4 5 6 9
19 27 28 33 36 35 37 13 42 43 45 44 46 20 21 49 50 51 53 52 54 26 29 30 56 57 58 60 59 2 34 38 39 61 62 63 31 4 5 41 47 48 64 8 40 10 9 11 55 1 14 15 16 18 17 22 3 23 24 25 6 7 32 12
20 26 29 34 35 36 38 41 43 42 44 45 47 19 49 21 51 50 52 53 55 27 28 56 30 58 57 59 60 22 33 37 61 39 63 62 4 31 6 13 46 64 48 40 8 9 10 12 54 14 1 16 15 17 18 2 23 3 25 24 5 32 7 11
21 28 30 35 37 38 39 42 44 45 46 47 48 49 50 51 52 53 54 55 1 29 56 57 58 59 60 2 22 3 36 61 62 63 4 31 5 6 7 43 64 8 40 9 10 11 12 13 14 15 16 17 18 19 20 23 24 25 26 27 32 33 34 41
22 31 6 40 10 9 12 1 16 15 18 17 20 2 3 23 25 24 27 26 29 4 5 7 32 34 33 36 35 38 8 11 13 41 43 42 45 44 47 14 19 21 49 51 50 53 52 55 28 30 56 58 57 60 59 37 39 61 63 62 46 48 64 54
23 5 32 10 11 12 41 15 18 17 19 20 49 3 24 25 27 26 28 29 56 6 7 33 34 36 35 37 38 61 9 13 42 43 45 44 46 47 64 16 21 50 51 53 52 54 55 14 30 57 58 60 59 2 22 39 62 63 31 4 48 8 40 1
24 32 33 12 41 13 42 18 20 19 49 21 50 25 27 26 29 28 56 30 57 7 34 36 35 38 37 61 39 62 11 43 45 44 47 46 64 48 8 17 51 53 52 55 54 14 1 15 58 60 59 22 2 23 3 63 31 4 6 5 40 10 9 16
25 7 34 11 13 41 43 17 19 20 21 49 51 24 26 27 28 29 30 56 58 32 33 35 36 37 38 39 61 63 12 42 44 45 46 47 48 64 40 18 50 52 53 54 55 1 14 16 57 59 60 2 22 3 23 62 4 31 5 6 8 9 10 15
26 34 35 41 43 42 44 19 49 21 51 50 52 27 28 29 56 30 58 57 59 33 36 37 38 61 39 63 62 4 13 45 46 47 64 48 40 8 9 20 53 54 55 14 1 16 15 17 60 2 22 23 3 25 24 31 5 6 32 7 10 11 12 18
27 33 36 13 42 43 45 20 21 49 50 51 53 26 29 28 30 56 57 58 60 34 35 38 37 39 61 62 63 31 41 44 47 46 48 64 8 40 10 19 52 55 54 1 14 15 16 18 59 22 2 3 23 24 25 4 6 5 7 32 9 12 11 17
28 35 37 42 44 45 46 49 50 51 52 53 54 29 56 30 57 58 59 60 2 36 38 61 39 62 63 4 31 5 43 47 64 48 8 40 9 10 11 21 55 14 1 15 16 17 18 19 22 23 3 24 25 26 27 6 32 7 33 34 12 41 13 20
29 36 38 43 45 44 47 21 51 50 53 52 55 28 30 56 58 57 60 59 22 35 37 39 61 63 62 31 4 6 42 46 48 64 40 8 10 9 12 49 54 1 14 16 15 18 17 20 2 3 23 25 24 27 26 5 7 32 34 33 11 13 41 19
30 38 39 44 47 46 48 51 52 53 55 54 1 56 58 57 59 60 22 2 3 37 61 63 62 4 31 6 5 7 45 64 40 8 9 10 12 11 13 50 14 16 15 17 18 20 19 21 23 25 24 26 27 29 28 32 34 33 35 36 41 43 42 49
31 40 10 1 16 15 18 2 3 23 25 24 27 4 5 6 7 32 34 33 36 8 9 11 12 13 41 43 42 45 14 17 19 20 21 49 51 50 53 22 26 28 29 30 56 58 57 60 35 37 38 39 61 63 62 44 46 47 48 64 52 54 55 59
32 12 41 18 20 19 49 25 27 26 29 28 56 7 34 33 36 35 38 37 61 11 13 43 42 45 44 47 46 64 17 21 51 50 53 52 55 54 14 24 30 58 57 60 59 22 2 23 39 63 62 31 4 6 5 48 40 8 10 9 1 16 15 3
33 13 42 20 21 49 50 26 29 28 30 56 57 34 35 36 38 37 39 61 62 41 43 44 45 47 46 48 64 8 19 51 52 53 55 54 1 14 15 27 58 59 60 22 2 3 23 24 63 4 31 6 5 7 32 40 9 10 12 11 16 17 18 25
34 41 43 19 49 21 51 27 28 29 56 30 58 33 36 35 37 38 61 39 63 13 42 45 44 46 47 64 48 40 20 50 53 52 54 55 14 1 16 26 57 60 59 2 22 23 3 25 62 31 4 5 6 32 7 8 10 9 11 12 15 18 17 24
35 42 44 49 50 51 52 29 56 30 57 58 59 36 38 37 61 39 62 63 4 43 45 47 46 64 48 8 40 9 21 53 55 54 14 1 15 16 17 28 60 22 2 23 3 24 25 26 31 6 5 32 7 33 34 10 12 11 41 13 18 20 19 27
36 43 45 21 51 50 53 28 30 56 58 57 60 35 37 38 39 61 63 62 31 42 44 46 47 48 64 40 8 10 49 52 54 55 1 14 16 15 18 29 59 2 22 3 23 25 24 27 4 5 6 7 32 34 33 9 11 12 13 41 17 19 20 26
37 45 46 50 53 52 54 30 57 58 60 59 2 38 39 61 62 63 31 4 5 44 47 48 64 8 40 10 9 11 51 55 1 14 15 16 18 17 19 56 22 3 23 24 25 27 26 28 6 7 32 33 34 36 35 12 13 41 42 43 20 21 49 29
38 44 47 51 52 53 55 56 58 57 59 60 22 37 61 39 63 62 4 31 6 45 46 64 48 40 8 9 10 12 50 54 14 1 16 15 17 18 20 30 2 23 3 25 24 26 27 29 5 32 7 34 33 35 36 11 41 13 43 42 19 49 21 28
39 46 48 52 54 55 1 57 59 60 2 22 3 61 62 63 4 31 5 6 7 47 64 8 40 9 10 11 12 13 53 14 15 16 17 18 19 20 21 58 23 24 25 26 27 28 29 30 32 33 34 35 36 37 38 41 42 43 44 45 49 50 51 56
40 1 16 2 3 23 25 4 5 6 7 32 34 8 9 10 11 12 13 41 43 14 15 17 18 19 20 21 49 51 22 24 26 27 28 29 30 56 58 31 33 35 36 37 38 39 61 63 42 44 45 46 47 48 64 50 52 53 54 55 57 59 60 62
41 19 49 27 28 29 56 33 36 35 37 38 61 13 42 43 45 44 46 47 64 20 21 50 51 53 52 54 55 14 26 30 57 58 60 59 2 22 23 34 39 62 63 31 4 5 6 32 48 8 40 10 9 11 12 1 15 16 18 17 3 24 25 7
42 49 50 29 56 30 57 36 38 37 61 39 62 43 45 44 47 46 64 48 8 21 51 53 52 55 54 14 1 15 28 58 60 59 22 2 23 3 24 35 63 31 4 6 5 32 7 33 40 10 9 12 11 41 13 16 18 17 20 19 25 27 26 34
43 21 51 28 30 56 58 35 37 38 39 61 63 42 44 45 46 47 48 64 40 49 50 52 53 54 55 1 14 16 29 57 59 60 2 22 3 23 25 36 62 4 31 5 6 7 32 34 8 9 10 11 12 13 41 15 17 18 19 20 24 26 27 33
44 51 52 56 58 57 59 37 61 39 63 62 4 45 46 47 64 48 40 8 9 50 53 54 55 14 1 16 15 17 30 60 2 22 23 3 25 24 26 38 31 5 6 32 7 34 33 35 10 11 12 41 13 43 42 18 19 20 49 21 27 28 29 36
45 50 53 30 57 58 60 38 39 61 62 63 31 44 47 46 48 64 8 40 10 51 52 55 54 1 14 15 16 18 56 59 22 2 3 23 24 25 27 37 4 6 5 7 32 33 34 36 9 12 11 13 41 42 43 17 20 19 21 49 26 29 28 35
46 52 54 57 59 60 2 61 62 63 4 31 5 47 64 48 8 40 9 10 11 53 55 14 1 15 16 17 18 19 58 22 23 3 24 25 26 27 28 39 6 32 7 33 34 35 36 37 12 41 13 42 43 44 45 20 49 21 50 51 29 56 30 38
47 53 55 58 60 59 22 39 63 62 31 4 6 46 48 64 40 8 10 9 12 52 54 1 14 16 15 18 17 20 57 2 3 23 25 24 27 26 29 61 5 7 32 34 33 36 35 38 11 13 41 43 42 45 44 19 21 49 51 50 28 30 56 37
48 55 1 59 22 2 3 63 4 31 6 5 7 64 40 8 9 10 12 11 13 54 14 16 15 17 18 20 19 21 60 23 25 24 26 27 29 28 30 62 32 34 33 35 36 38 37 39 41 43 42 44 45 47 46 49 51 50 52 53 56 58 57 61
49 29 56 36 38 37 61 43 45 44 47 46 64 21 51 50 53 52 55 54 14 28 30 58 57 60 59 22 2 23 35 39 63 62 31 4 6 5 32 42 48 40 8 10 9 12 11 41 1 16 15 18 17 20 19 3 25 24 27 26 7 34 33 13
50 30 57 38 39 61 62 44 47 46 48 64 8 51 52 53 55 54 1 14 15 56 58 59 60 22 2 3 23 24 37 63 4 31 6 5 7 32 33 45 40 9 10 12 11 13 41 42 16 17 18 20 19 21 49 25 26 27 29 28 34 35 36 43
51 56 58 37 61 39 63 45 46 47 64 48 40 50 53 52 54 55 14 1 16 30 57 60 59 2 22 23 3 25 38 62 31 4 5 6 32 7 34 44 8 10 9 11 12 41 13 43 15 18 17 19 20 49 21 24 27 26 28 29 33 36 35 42
52 57 59 61 62 63 4 47 64 48 8 40 9 53 55 54 14 1 15 16 17 58 60 22 2 23 3 24 25 26 39 31 6 5 32 7 33 34 35 46 10 12 11 41 13 42 43 44 18 20 19 49 21 50 51 27 29 28 56 30 36 38 37 45
53 58 60 39 63 62 31 46 48 64 40 8 10 52 54 55 1 14 16 15 18 57 59 2 22 3 23 25 24 27 61 4 5 6 7 32 34 33 36 47 9 11 12 13 41 43 42 45 17 19 20 21 49 51 50 26 28 29 30 56 35 37 38 44
54 60 2 62 31 4 5 48 8 40 10 9 11 55 1 14 15 16 18 17 19 59 22 3 23 24 25 27 26 28 63 6 7 32 33 34 36 35 37 64 12 13 41 42 43 45 44 46 20 21 49 50 51 53 52 29 30 56 57 58 38 39 61 47
55 59 22 63 4 31 6 64 40 8 9 10 12 54 14 1 16 15 17 18 20 60 2 23 3 25 24 26 27 29 62 5 32 7 34 33 35 36 38 48 11 41 13 43 42 44 45 47 19 49 21 51 50 52 53 28 56 30 58 57 37 61 39 46
56 37 61 45 46 47 64 50 53 52 54 55 14 30 57 58 60 59 2 22 23 38 39 62 63 31 4 5 6 32 44 48 8 40 10 9 11 12 41 51 1 15 16 18 17 19 20 49 3 24 25 27 26 28 29 7 33 34 36 35 13 42 43 21
57 61 62 47 64 48 8 53 55 54 14 1 15 58 60 59 22 2 23 3 24 39 63 31 4 6 5 32 7 33 46 40 10 9 12 11 41 13 42 52 16 18 17 20 19 49 21 50 25 27 26 29 28 56 30 34 36 35 38 37 43 45 44 51
58 39 63 46 48 64 40 52 54 55 1 14 16 57 59 60 2 22 3 23 25 61 62 4 31 5 6 7 32 34 47 8 9 10 11 12 13 41 43 53 15 17 18 19 20 21 49 51 24 26 27 28 29 30 56 33 35 36 37 38 42 44 45 50
59 63 4 64 40 8 9 54 14 1 16 15 17 60 2 22 23 3 25 24 26 62 31 5 6 32 7 34 33 35 48 10 11 12 41 13 43 42 44 55 18 19 20 49 21 51 50 52 27 28 29 56 30 58 57 36 37 38 61 39 45 46 47 53
60 62 31 48 8 40 10 55 1 14 15 16 18 59 22 2 3 23 24 25 27 63 4 6 5 7 32 33 34 36 64 9 12 11 13 41 42 43 45 54 17 20 19 21 49 50 51 53 26 29 28 30 56 57 58 35 38 37 39 61 44 47 46 52
61 47 64 53 55 54 14 58 60 59 22 2 23 39 63 62 31 4 6 5 32 46 48 40 8 10 9 12 11 41 52 1 16 15 18 17 20 19 49 57 3 25 24 27 26 29 28 56 7 34 33 36 35 38 37 13 43 42 45 44 21 51 50 30
62 48 8 55 1 14 15 59 22 2 3 23 24 63 4 31 6 5 7 32 33 64 40 9 10 12 11 13 41 42 54 16 17 18 20 19 21 49 50 60 25 26 27 29 28 30 56 57 34 35 36 38 37 39 61 43 44 45 47 46 51 52 53 58
63 64 40 54 14 1 16 60 2 22 23 3 25 62 31 4 5 6 32 7 34 48 8 10 9 11 12 41 13 43 55 15 18 17 19 20 49 21 51 59 24 27 26 28 29 56 30 58 33 36 35 37 38 61 39 42 45 44 46 47 50 53 52 57
64 54 14 60 2 22 23 62 31 4 5 6 32 48 8 40 10 9 11 12 41 55 1 15 16 18 17 19 20 49 59 3 24 25 27 26 28 29 56 63 7 33 34 36 35 37 38 61 13 42 43 45 44 46 47 21 50 51 53 52 30 57 58 39
2 3
)grp"},
};

}  // namespace pgro::corpus_data

#endif  // PGRO_CORPUS_DATA_HPP
