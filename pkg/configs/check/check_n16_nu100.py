_base_ = [
    '../_base_/grids/torus_n16.py', '../_base_/params/delay_mu0.1_etd1.py',
    '../_base_/default_runtime.py'
]
params = dict(nu=100.)
forcing = dict(
    type='SingleMode', k=(1, 0, 0), polarization=(0, 1, 0), amplitude=1.)
experiment = dict(type='check', trials=20, continuous_trials=10)
