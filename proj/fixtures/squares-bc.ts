% R_b union R_c: squares over {b} or over {c}; four local symbols
k: 2
terminal: b c
local: db ob dc oc
projection: db->b ob->b dc->c oc->c
tile:
# #
# db
tile:
# #
# dc
tile:
# #
db ob
tile:
# #
ob #
tile:
# #
ob ob
tile:
# #
dc oc
tile:
# #
oc #
tile:
# #
oc oc
tile:
# db
# ob
tile:
# ob
# #
tile:
# ob
# ob
tile:
# dc
# oc
tile:
# oc
# #
tile:
# oc
# oc
tile:
db #
# #
tile:
db ob
ob db
tile:
ob #
db #
tile:
ob #
ob #
tile:
ob db
# #
tile:
ob db
ob ob
tile:
ob ob
# #
tile:
ob ob
db ob
tile:
ob ob
ob ob
tile:
dc #
# #
tile:
dc oc
oc dc
tile:
oc #
dc #
tile:
oc #
oc #
tile:
oc dc
# #
tile:
oc dc
oc oc
tile:
oc oc
# #
tile:
oc oc
dc oc
tile:
oc oc
oc oc
