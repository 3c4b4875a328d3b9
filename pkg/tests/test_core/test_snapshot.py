import os.path as osp
import tempfile

import pytest
import torch

from dnse.core.spectral import (TorusGrid, load_snapshot, random_field,
                                save_snapshot)


def test_snapshot_round_trip():
    grid = TorusGrid(L=3., N=4)
    u = random_field(grid, torch.Generator().manual_seed(0))
    with tempfile.TemporaryDirectory() as tmpdir:
        filepath = osp.join(tmpdir, 'sub', 'u.dns')
        save_snapshot(u, filepath)
        # header of 20 bytes, then 6 doubles per retained wavenumber
        assert osp.getsize(filepath) == 20 + grid.num_modes * 48
        with open(filepath, 'rb') as f:
            assert f.read(4) == b'DNS1'
        restored = load_snapshot(filepath)
    assert restored.grid == grid
    assert torch.equal(restored.coeffs, u.coeffs)


def test_snapshot_errors():
    grid = TorusGrid(N=4)
    u = random_field(grid, torch.Generator().manual_seed(0))
    with tempfile.TemporaryDirectory() as tmpdir:
        bad_magic = osp.join(tmpdir, 'bad.dns')
        with open(bad_magic, 'wb') as f:
            f.write(b'XXXX' + bytes(16))
        with pytest.raises(ValueError):
            load_snapshot(bad_magic)

        short = osp.join(tmpdir, 'short.dns')
        with open(short, 'wb') as f:
            f.write(b'DNS1')
        with pytest.raises(ValueError):
            load_snapshot(short)

        truncated = osp.join(tmpdir, 'truncated.dns')
        save_snapshot(u, truncated)
        with open(truncated, 'rb') as f:
            raw = f.read()
        with open(truncated, 'wb') as f:
            f.write(raw[:-48])
        with pytest.raises(ValueError):
            load_snapshot(truncated)
