% R_3 = (a a b)^+ as one-row pictures; the local symbol counts the position
k: 2
terminal: a b
local: 1 2 3
projection: 1->a 2->a 3->b
tile:
# #
# 1
tile:
# #
1 2
tile:
# #
2 3
tile:
# #
3 #
tile:
# #
3 1
tile:
# 1
# #
tile:
1 2
# #
tile:
2 3
# #
tile:
3 #
# #
tile:
3 1
# #
