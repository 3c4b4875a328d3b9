_base_ = [
    '../_base_/grids/torus_n16.py', '../_base_/params/delay_mu0.1_etd1.py',
    '../_base_/default_runtime.py'
]
params = dict(nu=1.)
forcing = dict(
    type='SingleMode', k=(1, 0, 0), polarization=(0, 1, 0), amplitude=1.)
initial = dict(
    segment=dict(type='Random', seed=1, decay=3., norm=0.5, s=2.),
    endpoint=dict(type='Random', seed=2, decay=3., norm=0.5, s=1.))
experiment = dict(type='simulate', intervals=4)
save_snapshots = True
