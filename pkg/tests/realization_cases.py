"""Single-entry mutations of the flat positive control, with the check that must fail first."""
from liecert.catalog import flat_pair, omega_from_pairs
from liecert.linalg import Matrix
from liecert.realization import ExtrinsicRealization, SplitSymplecticSpace

BASE_OMEGA = {(0, 1): 1, (2, 3): 1}
BASE_V = {(0, 0): 1, (1, 1): 1}


def flat(omega=None, V1=(0, 1), V2=(2, 3), lam=None, v=None):
    om = dict(BASE_OMEGA)
    om.update(omega or {})
    vv = dict(BASE_V)
    vv.update(v or {})
    P = flat_pair(2).pair
    Omega = omega_from_pairs(4, [(i, j, c) for (i, j), c in om.items()])
    space = SplitSymplecticSpace.from_indices(Omega, V1, V2)
    Lambda = [Matrix.zeros(4), Matrix.zeros(4)]
    for (b, i, j), c in (lam or {}).items():
        Lambda[b] = Lambda[b] + Matrix.from_entries(4, 4, {(i, j): c})
    return ExtrinsicRealization(P, space, Lambda, Matrix.from_entries(4, 2, vv))


# (description, kwargs, first failing check)
REJECT = [
    ("Omega[0,1] = 0", {"omega": {(0, 1): 0}}, "space"),
    ("Omega[2,3] = 0", {"omega": {(2, 3): 0}}, "space"),
    ("Omega[0,2] = 1", {"omega": {(0, 2): 1}}, "space"),
    ("Omega[0,3] = 1", {"omega": {(0, 3): 1}}, "space"),
    ("Omega[1,2] = 1", {"omega": {(1, 2): 1}}, "space"),
    ("Omega[1,3] = 1", {"omega": {(1, 3): 1}}, "space"),
    ("Lambda(x0)[0,0] = 1", {"lam": {(0, 0, 0): 1}}, "lambda-in-sp"),
    ("Lambda(x0)[0,2] = 1", {"lam": {(0, 0, 2): 1}}, "lambda-in-sp"),
    ("Lambda(x1)[1,1] = 1", {"lam": {(1, 1, 1): 1}}, "lambda-in-sp"),
    ("Lambda(x1)[3,3] = 1", {"lam": {(1, 3, 3): 1}}, "lambda-in-sp"),
    ("Lambda(x0)[0,1] = 1", {"lam": {(0, 0, 1): 1}}, "homomorphism"),
    ("Lambda(x0)[2,3] = 1", {"lam": {(0, 2, 3): 1}}, "block-structure"),
    ("Lambda(x1)[3,2] = 1", {"lam": {(1, 3, 2): 1}}, "block-structure"),
    ("Lambda(x0)[1,0] = 1", {"lam": {(0, 1, 0): 1}}, "block-structure"),
    ("v[0,0] = 0", {"v": {(0, 0): 0}}, "kernel-is-k"),
    ("v[1,1] = 0", {"v": {(1, 1): 0}}, "kernel-is-k"),
    ("v[2,0] = 1", {"v": {(2, 0): 1}}, "v-iso-onto-V1"),
    ("v[3,1] = 1", {"v": {(3, 1): 1}}, "v-iso-onto-V1"),
    ("V1 = {0,2}, V2 = {1,3}", {"V1": (0, 2), "V2": (1, 3)}, "space"),
    ("V1 = {0,1,2}, V2 = {3}", {"V1": (0, 1, 2), "V2": (3,)}, "space"),
    ("V2 = {2}", {"V2": (2,)}, "space"),
    ("V2 = {1,2,3}", {"V2": (1, 2, 3)}, "space"),
    ("V1 = {2,3}, V2 = {0,1}", {"V1": (2, 3), "V2": (0, 1)}, "v-iso-onto-V1"),
]

# mutations that keep every condition true; rejecting any of them is a false reject
ACCEPT = [
    ("unmodified", {}),
    ("Omega[0,1] = 2", {"omega": {(0, 1): 2}}),
    ("Omega[2,3] = -1/3", {"omega": {(2, 3): "-1/3"}}),
    ("v[0,1] = 1", {"v": {(0, 1): 1}}),
    ("v[0,0] = 2", {"v": {(0, 0): 2}}),
    ("v[0,0] = 1i", {"v": {(0, 0): "1i"}}),
]
