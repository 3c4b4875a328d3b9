_base_ = [
    '../_base_/grids/torus_n16.py', '../_base_/params/delay_mu0.1_etd1.py',
    '../_base_/default_runtime.py'
]
params = dict(nu=1.)
trilinear = dict(budget=200, safety=2., seed=0)
experiment = dict(type='estimate-c', validation=200)
