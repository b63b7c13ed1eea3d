% R_a: square pictures over {a} of size at least (2,2), marked by the diagonal
k: 2
terminal: a
local: da oa
projection: da->a oa->a
tile:
# #
# da
tile:
# #
da oa
tile:
# #
oa #
tile:
# #
oa oa
tile:
# da
# oa
tile:
# oa
# #
tile:
# oa
# oa
tile:
da #
# #
tile:
da oa
oa da
tile:
oa #
da #
tile:
oa #
oa #
tile:
oa da
# #
tile:
oa da
oa oa
tile:
oa oa
# #
tile:
oa oa
da oa
tile:
oa oa
oa oa
