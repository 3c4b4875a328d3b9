
class GridMismatchError(ValueError):
    """Operands live on different torus grids."""


class DomainError(ValueError):
    """An argument lies outside the domain where the operation is defined.

    Args:
        msg (str): Error message.
        nearest (tuple, optional): Nearest admissible values, e.g. the two
            representable lattice times around a requested time.
    """

    def __init__(self, msg, nearest=None):
        super(DomainError, self).__init__(msg)
        self.nearest = nearest


class IntegrationError(FloatingPointError):
    """Non-finite coefficients appeared while integrating.

    Args:
        msg (str): Error message.
        step (int): Index of the substep whose output was not finite.
    """

    def __init__(self, msg, step):
        super(IntegrationError, self).__init__(f'{msg} (substep {step})')
        self.step = step


class ConfigError(ValueError):
    """Invalid experiment config.

    Args:
        msg (str): Error message.
        key (str, optional): Dotted name of the offending key.
        lineno (int, optional): Line of the config text where the key is
            assigned.
    """

    def __init__(self, msg, key=None, lineno=None):
        prefix = f'line {lineno}: ' if lineno is not None else ''
        super(ConfigError, self).__init__(prefix + msg)
        self.key = key
        self.lineno = lineno
