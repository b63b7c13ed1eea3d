% a^{m,2m}, 2-TS over {n, se, ne}: tiles of the bordered r3
k: 2
terminal: a
local: n se ne
projection: n->a se->a ne->a
tile:
# #
# se
tile:
# #
n n
tile:
# #
n ne
tile:
# #
se n
tile:
# #
ne #
tile:
# n
# #
tile:
# n
# n
tile:
# se
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
n ne
tile:
n n
se n
tile:
n n
se ne
tile:
n se
# #
tile:
n se
n n
tile:
n ne
ne n
tile:
se n
n se
tile:
se ne
# #
tile:
ne #
n #
tile:
ne n
# #
tile:
ne n
n n
