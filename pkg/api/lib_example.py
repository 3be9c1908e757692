from cpmackey import FgAbGroup, IntegerMatrix, burnside, ext, render_functor, tor
from cpmackey.mackey import mackey_from_matrices, prune

# Z on both levels, restriction 1, transfer 2, trivial conjugation
m = mackey_from_matrices(
    2,
    FgAbGroup.free(1),
    FgAbGroup.free(1),
    IntegerMatrix.from_rows([[1]]),
    IntegerMatrix.from_rows([[2]]),
    IntegerMatrix.identity(1),
)

print(render_functor(burnside(2), name="A"))
print(render_functor(prune(tor(1, m, m)), name="Tor_1(M, M)"))
print(render_functor(prune(ext(2, m, m)), name="Ext^2(M, M)"))
