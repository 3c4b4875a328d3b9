import os.path as osp

import mmcv
import numpy as np
import torch

from .field import SpectralField
from .torus import TorusGrid

SNAPSHOT_MAGIC = b'DNS1'
SNAPSHOT_VERSION = 1

# magic, version, N, L; all little-endian
_HEADER = np.dtype([('magic', 'S4'), ('version', '<u4'), ('N', '<u4'),
                    ('L', '<f8')])


def _flat_modes(grid, coeffs):
    # (3, n, n, n) -> (n^3, 3) in lexicographic k-order, centre removed
    flat = coeffs.permute(1, 2, 3, 0).reshape(-1, 3)
    centre = grid.num_modes // 2
    return torch.cat([flat[:centre], flat[centre + 1:]])


def save_snapshot(field, filepath):
    """Write a field in the ``DNS1`` binary snapshot format.

    Layout: magic ``DNS1``, version (u32), N (u32), L (f64), then for each
    retained wavenumber in lexicographic k-order the three complex components
    as six f64 (re, im interleaved). Everything little-endian.
    """
    grid = field.grid
    header = np.array([(SNAPSHOT_MAGIC, SNAPSHOT_VERSION, grid.N, grid.L)],
                      dtype=_HEADER)
    modes = torch.view_as_real(_flat_modes(grid, field.coeffs))
    payload = modes.numpy().astype('<f8', copy=False)
    mmcv.mkdir_or_exist(osp.dirname(osp.abspath(filepath)))
    with open(filepath, 'wb') as f:
        f.write(header.tobytes())
        f.write(payload.tobytes())


def load_snapshot(filepath):
    """Read a field written by :func:`save_snapshot`."""
    with open(filepath, 'rb') as f:
        raw = f.read()
    if len(raw) < _HEADER.itemsize:
        raise ValueError(f'{filepath} is too short to be a snapshot')
    header = np.frombuffer(raw[:_HEADER.itemsize], dtype=_HEADER)[0]
    if header['magic'] != SNAPSHOT_MAGIC:
        raise ValueError(f'{filepath} is not a DNS1 snapshot')
    if header['version'] != SNAPSHOT_VERSION:
        raise ValueError(
            f'unsupported snapshot version {int(header["version"])}')
    grid = TorusGrid(L=float(header['L']), N=int(header['N']))
    payload = np.frombuffer(raw[_HEADER.itemsize:], dtype='<f8')
    if payload.size != grid.num_modes * 6:
        raise ValueError(
            f'{filepath} holds {payload.size} values, expected '
            f'{grid.num_modes * 6} for N={grid.N}')
    modes = torch.view_as_complex(
        torch.from_numpy(payload.astype(np.float64).reshape(-1, 3, 2)))
    centre = grid.num_modes // 2
    flat = torch.cat([
        modes[:centre],
        torch.zeros(1, 3, dtype=torch.complex128), modes[centre:]
    ])
    n = grid.size
    coeffs = flat.reshape(n, n, n, 3).permute(3, 0, 1, 2).contiguous()
    return SpectralField(grid, coeffs)
