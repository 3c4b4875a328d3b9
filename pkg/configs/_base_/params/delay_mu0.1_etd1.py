params = dict(mu=0.1, alpha=1., M=64, scheme='etd1')
forcing = dict(type='Zero')
initial = dict(segment=dict(type='Zero'), endpoint=dict(type='Zero'))
