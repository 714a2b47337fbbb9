"""Frozen oracle values; regenerate with scripts/freeze_oracle_values.py."""

# generated by scripts/freeze_oracle_values.py; values certified by
# series/quadrature oracles cross-checked against mpmath built-ins
FROZEN_I = {
    (0.0, 1.0): 1.2660658777520083,
    (1.0, 1.0): 0.56515910399248503,
    (2.0, 1.0): 0.13574766976703828,
    (0.5, 2.0): 2.046236863089055,
    (1.0, 3.0): 3.9533702174026094,
    (2.0, 3.0): 2.2452124409299512,
    (3.0, 3.0): 0.95975362949600786,
    (4.2, 17.3): 1868290.3975923097,
    (-2.5, 0.7): 5.4251534590619448,
    (-1.0, 1.0): 0.56515910399248503,
    (0.0, 30.5): 1278062138712.5665,
    (3.0, 100.0): 1.0262740175651901e+42,
    (19.5, 450.0): 3.336387901891165e+193,
    (7.0, 0.05): 1.2111096187927373e-15,
}
FROZEN_K = {
    (0.0, 1.0): 0.42102443824070833,
    (1.0, 1.0): 0.60190723019723457,
    (2.0, 1.0): 1.6248388986351775,
    (0.5, 1.0): 0.46106850444789456,
    (2.7, 0.3): 127.83914271458475,
    (9.5, 0.02): 5.9645529281617929e+23,
    (0.3, 120.0): 8.7668414762859245e-54,
    (5.0, 62.0): 2.2990989633172596e-28,
    (1.5, 8.0): 0.00016722900749831943,
    (-3.0, 2.0): 0.64738539094863415,
}
FROZEN_PHI = {
    ('phiI', 1.0, 1.0): 0.4619195272732396,
    ('phiK', 1.0, 1.0): -0.88824564734129734,
    ('phiP', 1.0, 1.0): -0.016028110545652983,
    ('phiI', 2.0, 3.0): 0.24731654576049956,
    ('phiK', 2.0, 3.0): -0.29665097143336022,
    ('phiP', 2.0, 3.0): 0.024032267878534622,
    ('phiI', 0.5, 0.7): 0.62597243633758712,
    ('phiK', 0.5, 0.7): -1.4285714285714287,
    ('phiP', 0.5, 0.7): 0.091647345391282962,
    ('phiI', 3.0, 10.0): 0.094971072240822759,
    ('phiK', 3.0, 10.0): -0.096515390126940549,
    ('phiP', 3.0, 10.0): 0.0076218522019790732,
}
FROZEN_MISC = {
    ('y', 1.0, 1.0): 1.2401937238700897,
    ('z', 1.0, 1.0): -1.6994839355937723,
    ('ratio_I', 0.0, 1.0): 0.44638996589653451,
    ('ratio_K', 0.0, 1.0): 1.4296253982604018,
    ('ratio_K', 1.0, 1.0): 2.6994839355937723,
}
