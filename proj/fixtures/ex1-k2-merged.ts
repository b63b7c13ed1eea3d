% a^{m,2m}, 2-TS over {n, e}: tiles of the bordered r2, accepts a^{4,10} too
k: 2
terminal: a
local: n e
projection: n->a e->a
tile:
# #
# e
tile:
# #
n n
tile:
# #
n e
tile:
# #
e #
tile:
# #
e n
tile:
# n
# #
tile:
# n
# n
tile:
# e
# n
tile:
n #
# #
tile:
n #
n #
tile:
n n
# #
tile:
n n
n n
tile:
n n
n e
tile:
n n
e n
tile:
n n
e e
tile:
n e
# #
tile:
n e
n n
tile:
n e
e n
tile:
e #
n #
tile:
e n
# #
tile:
e n
n n
tile:
e n
n e
tile:
e e
# #
