#---------------------------------------------------------------------------------------------------
__all__ = (
    'Config',
    'Descriptor',
    'NoValue',
    'Bool',
    'Choice',
    'Complex',
    'Float',
    'FloatPair',
    'OpenInterval',
    'PositiveFloat',
    'PositiveInt',
    'String',
)

import math

from .errors import ConfigError

#---------------------------------------------------------------------------------------------------
# Used instead of None to allow None as a valid configuration value.
class NoValue: ...

#---------------------------------------------------------------------------------------------------
# Converters run before the checkers. Values typed on a command line or parsed by YAML as strings
# (YAML reads "1e-3" as a string) are turned into numbers here.
def _to_float(name, value):
    if isinstance(value, bool):
        raise ConfigError(f'Value {value!r} of "{name}" configuration must be a real number.')
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigError(
            f'Value {value!r} of "{name}" configuration must be a real number.') from None

def _to_int(name, value):
    if isinstance(value, bool):
        raise ConfigError(f'Value {value!r} of "{name}" configuration must be an integer.')
    if isinstance(value, str):
        try:
            value = int(value, 0)
        except ValueError:
            raise ConfigError(
                f'Value {value!r} of "{name}" configuration must be an integer.') from None
    if not isinstance(value, int):
        raise ConfigError(f'Value {value!r} of "{name}" configuration must be an integer.')
    return value

def _to_complex(name, value):
    if isinstance(value, bool):
        raise ConfigError(f'Value {value!r} of "{name}" configuration must be a complex number.')
    try:
        if isinstance(value, str):
            value = value.replace(' ', '').replace('i', 'j')
        return complex(value)
    except (TypeError, ValueError):
        raise ConfigError(
            f'Value {value!r} of "{name}" configuration must be a complex number.') from None

def _to_bool(name, value):
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.lower() in ('true', 'yes', 'on', '1'):
        return True
    if isinstance(value, str) and value.lower() in ('false', 'no', 'off', '0'):
        return False
    raise ConfigError(f'Value {value!r} of "{name}" configuration must be a boolean.')

#---------------------------------------------------------------------------------------------------
class FiniteChecker:
    def apply(self, name, value):
        if not math.isfinite(abs(value)):
            raise ConfigError(f'Value {value!r} of "{name}" configuration must be finite.')

#---------------------------------------------------------------------------------------------------
class PositiveChecker:
    def __init__(self, strict=True):
        self.strict = strict

    def apply(self, name, value):
        if value < 0 or (self.strict and value == 0):
            kind = 'positive' if self.strict else 'non-negative'
            raise ConfigError(f'Value {value!r} of "{name}" configuration must be {kind}.')

#---------------------------------------------------------------------------------------------------
class IntervalChecker:
    def __init__(self, lower, upper):
        self.lower = lower
        self.upper = upper

    def apply(self, name, value):
        if not self.lower < value < self.upper:
            raise ConfigError(
                f'Value {value!r} of "{name}" configuration must lie in the open interval '
                f'({self.lower}, {self.upper}).')

#---------------------------------------------------------------------------------------------------
class ChoiceChecker:
    def __init__(self, *choices):
        self.choices = choices

    def apply(self, name, value):
        if value not in self.choices:
            names = ', '.join(repr(c) for c in self.choices)
            raise ConfigError(f'Value {value!r} of "{name}" configuration must be one of {names}.')

#---------------------------------------------------------------------------------------------------
class Descriptor:
    CONVERTER = None
    CHECKERS = ()

    def __init__(self, default=NoValue, checkers=()):
        self.default = default
        self.checkers = self.CHECKERS + tuple(checkers)

    def _convert(self, value):
        if self.CONVERTER is None:
            return value
        return type(self).CONVERTER(self.name, value)

    def check(self, value):
        value = self._convert(value)
        for checker in self.checkers:
            checker.apply(self.name, value)
        return value

    def __set_name__(self, cls, name):
        self.cls = cls
        self.name = name
        self.attr = '___config_' + name + '___'

        # Make sure the default is valid.
        if self.default is not NoValue and self.default is not None:
            self.default = self.check(self.default)

        # Let the configuration class know the state.
        if self.default is NoValue:
            cls.add_required(name)
        else:
            cls.add_optional(name)

    def __get__(self, obj, cls=None):
        # Attribute looked up on the class.
        if obj is None:
            return self

        # Attribute looked up on an instance.
        try:
            return getattr(obj, self.attr)
        except AttributeError:
            if self.default is not NoValue:
                return self.default
        raise AttributeError(f'Configuration {self.name} on {self.cls!r} has not been set.')

    def __set__(self, obj, value):
        if hasattr(obj, self.attr):
            raise AttributeError(f'Configuration {self.name} on {self.cls!r} is already set.')

        # Validate and set the value on the instance.
        setattr(obj, self.attr, self.check(value))
        obj.___changed___ += (self.name,)

    def __delete__(self, obj):
        raise AttributeError(f'Configuration {self.name} on {self.cls!r} is read-only.')

#---------------------------------------------------------------------------------------------------
class Bool(Descriptor):
    CONVERTER = _to_bool

class Float(Descriptor):
    CONVERTER = _to_float
    CHECKERS = (
        FiniteChecker(),
    )

class PositiveFloat(Float):
    CHECKERS = Float.CHECKERS + (
        PositiveChecker(),
    )

class PositiveInt(Descriptor):
    CONVERTER = _to_int
    CHECKERS = (
        PositiveChecker(),
    )

class Complex(Descriptor):
    CONVERTER = _to_complex
    CHECKERS = (
        FiniteChecker(),
    )

#---------------------------------------------------------------------------------------------------
class OpenInterval(Float):
    def __init__(self, lower, upper, *pargs, **kargs):
        super().__init__(*pargs, checkers=(IntervalChecker(lower, upper),), **kargs)

#---------------------------------------------------------------------------------------------------
class String(Descriptor):
    @staticmethod
    def CONVERTER(name, value):
        if not isinstance(value, str):
            raise ConfigError(f'Value {value!r} of "{name}" configuration must be a string.')
        return value

class Choice(String):
    def __init__(self, choices, *pargs, **kargs):
        super().__init__(*pargs, checkers=(ChoiceChecker(*choices),), **kargs)

#---------------------------------------------------------------------------------------------------
class FloatPair(Descriptor):
    @staticmethod
    def CONVERTER(name, value):
        if isinstance(value, str):
            value = value.strip('()[] ').split(',')
        try:
            first, second = value
        except (TypeError, ValueError):
            raise ConfigError(
                f'Value {value!r} of "{name}" configuration must be a pair of reals.') from None
        return (_to_float(name, first), _to_float(name, second))

#---------------------------------------------------------------------------------------------------
class Config:
    ___required___ = ()
    ___optional___ = ()

    @classmethod
    def add_required(cls, name):
        cls.___required___ += (name,)

    @classmethod
    def add_optional(cls, name):
        cls.___optional___ += (name,)

    def __init__(self, kargs=None, owner=None):
        self.___changed___ = ()
        kargs = {} if kargs is None else kargs
        owner = type(self).__name__ if owner is None else owner

        # Check for unknown configuration keywords.
        names = set(kargs)
        names.difference_update(self.___required___)
        names.difference_update(self.___optional___)
        if names:
            raise ConfigError(f'Unknown keywords {sorted(names)!r} in configuration for {owner}.')

        # Validate and set the required configuration.
        for name in self.___required___:
            try:
                value = kargs[name]
            except KeyError:
                raise ConfigError(
                    f'Missing required "{name}" configuration for {owner}.') from None

            try:
                # Set the property for the keyword. The property will check for validity.
                setattr(self, name, value)
            except ConfigError as e:
                raise ConfigError(f'[{owner}]: ' + str(e)) from None

        # Validate and set the optional configuration.
        for name in self.___optional___:
            try:
                value = kargs[name]
            except KeyError:
                continue

            try:
                setattr(self, name, value)
            except ConfigError as e:
                raise ConfigError(f'[{owner}]: ' + str(e)) from None

        self.validate()

    def validate(self):
        # Cross-field checks go here in subclasses.
        ...

    @property
    def required_map(self):
        return dict((name, getattr(self, name)) for name in self.___required___)

    @property
    def optional_map(self):
        return dict((name, getattr(self, name)) for name in self.___optional___)

    @property
    def changed_map(self):
        return dict((name, getattr(self, name)) for name in self.___changed___)

    def as_dict(self):
        return {**self.required_map, **self.optional_map}
