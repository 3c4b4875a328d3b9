grid = dict(L=6.283185307179586, N=8)  # 2 * pi
