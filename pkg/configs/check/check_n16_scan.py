_base_ = './check_n16_nu100.py'
params = dict(nu=1.)
experiment = dict(
    type='check', scan=True, trials=20, continuous_trials=10,
    long_time_intervals=3)
