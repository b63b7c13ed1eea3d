% a^{m,2m}, 3-TS over {n, e}: 3-tiles of the two-diagonal pattern for m = 2..5
k: 3
terminal: a
local: n e
projection: n->a e->a
tile:
# # #
# e n
# n e
tile:
# # #
n n n
n n n
tile:
# # #
n n n
n n e
tile:
# # #
n n n
e n n
tile:
# # #
n n e
n e n
tile:
# # #
n n e
e e n
tile:
# # #
n e #
e n #
tile:
# # #
e n n
n e n
tile:
# # #
e n n
n e e
tile:
# n n
# n n
# # #
tile:
# n n
# n n
# n n
tile:
# n e
# n n
# # #
tile:
# n e
# n n
# n n
tile:
# e n
# n e
# # #
tile:
# e n
# n e
# n n
tile:
n n #
n n #
# # #
tile:
n n #
n n #
n n #
tile:
n n n
n n n
# # #
tile:
n n n
n n n
n n n
tile:
n n n
n n n
n n e
tile:
n n n
n n n
e n n
tile:
n n n
n n e
n e n
tile:
n n n
n n e
e e n
tile:
n n n
e n n
n e n
tile:
n n n
e n n
n e e
tile:
n n e
n n n
# # #
tile:
n n e
n n n
n n n
tile:
n n e
n e n
e n n
tile:
n n e
e e n
# # #
tile:
n e #
e n #
# # #
tile:
n e #
e n #
n n #
tile:
n e n
n n e
# # #
tile:
n e n
n n e
n n n
tile:
n e n
e n n
# # #
tile:
n e n
e n n
n n n
tile:
e n #
n n #
# # #
tile:
e n #
n n #
n n #
tile:
e n n
n n n
# # #
tile:
e n n
n n n
n n n
tile:
e n n
n e n
n n e
tile:
e n n
n e e
# # #
