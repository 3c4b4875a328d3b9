_base_ = [
    '../_base_/grids/torus_n8.py', '../_base_/params/delay_mu0.1_etd1.py',
    '../_base_/default_runtime.py'
]
params = dict(nu=1., M=16)
experiment = dict(type='simulate', intervals=2)
