grid = dict(L=6.283185307179586, N=16)  # 2 * pi
