# Copyright (c) OpenMMLab. All rights reserved.
import mmcv
from packaging.specifiers import SpecifierSet
from packaging.version import Version

from .version import __version__, version_info

MMCV_REQUIREMENT = '>=1.3.8,<=1.5.0'


def mmcv_compatible(version, requirement=MMCV_REQUIREMENT):
    """Whether an mmcv version string satisfies ``requirement``.

    Pre-releases count, so ``1.4.0rc1`` is accepted by ``>=1.3.8``.
    """
    return SpecifierSet(requirement).contains(
        Version(version), prereleases=True)


assert mmcv_compatible(mmcv.__version__), \
    f'MMCV=={mmcv.__version__} is used but incompatible. ' \
    f'Please install mmcv{MMCV_REQUIREMENT}.'

__all__ = ['__version__', 'version_info', 'mmcv_compatible']
