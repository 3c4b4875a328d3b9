# Copyright (c) OpenMMLab. All rights reserved.
from .errors import (ConfigError, DomainError, GridMismatchError,
                     IntegrationError)
from .nonlinearity import *  # noqa: F401,F403
from .spectral import *  # noqa: F401,F403

__all__ = [
    'ConfigError', 'DomainError', 'GridMismatchError', 'IntegrationError'
]
