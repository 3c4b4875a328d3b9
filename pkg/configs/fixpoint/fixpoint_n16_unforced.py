_base_ = './fixpoint_n16_nu100.py'
forcing = dict(type='Zero')
experiment = dict(type='fixpoint', start_radius=0.1, stokes_check=False)
