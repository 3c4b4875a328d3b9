seed = 0
log_level = 'INFO'
work_dir = None
save_snapshots = False
tolerances = dict(fixpoint=1e-10, max_iter=500, allowance=0.05)
# c=None estimates the constants, safety multiplies the estimate
trilinear = dict(budget=200, safety=2., seed=None, c=None)
