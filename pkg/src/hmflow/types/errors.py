#---------------------------------------------------------------------------------------------------
__all__ = (
    'HmflowError',
    'ValidationError',
    'DomainError',
    'ConfigError',
    'GeometryError',
    'NondegeneracyError',
    'NumericalError',
    'QuadratureError',
    'ConvergenceError',
    'DegenerateScaleError',
    'DivergenceError',
    'NoBubbleError',
    'ReconstructionError',
    'OutputError',
)

#---------------------------------------------------------------------------------------------------
class HmflowError(Exception):
    exit_code = 1

#---------------------------------------------------------------------------------------------------
# Invalid input detected before any numerics run.
class ValidationError(HmflowError, ValueError):
    exit_code = 1

class DomainError(ValidationError): ...
class ConfigError(ValidationError): ...
class GeometryError(ValidationError): ...
class NondegeneracyError(ValidationError): ...

#---------------------------------------------------------------------------------------------------
class NumericalError(HmflowError, ArithmeticError):
    exit_code = 2

class QuadratureError(NumericalError):
    def __init__(self, msg, achieved=None, *pargs, **kargs):
        super().__init__(msg, *pargs, **kargs)
        self.achieved = achieved

class ConvergenceError(NumericalError):
    def __init__(self, msg, trace=(), *pargs, **kargs):
        super().__init__(msg, *pargs, **kargs)
        self.trace = tuple(trace)

class DegenerateScaleError(NumericalError): ...

class DivergenceError(NumericalError):
    def __init__(self, msg, snapshot=None, *pargs, **kargs):
        super().__init__(msg, *pargs, **kargs)
        self.snapshot = snapshot

class NoBubbleError(NumericalError): ...

class ReconstructionError(NumericalError):
    def __init__(self, msg, error=None, *pargs, **kargs):
        super().__init__(msg, *pargs, **kargs)
        self.error = error

#---------------------------------------------------------------------------------------------------
class OutputError(HmflowError, OSError):
    exit_code = 3
