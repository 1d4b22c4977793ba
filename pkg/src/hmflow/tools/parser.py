#---------------------------------------------------------------------------------------------------
__all__ = (
    'load',
    'load_path',
    'parse_overrides',
)

import pathlib
import re

import yaml

from ..types.errors import ConfigError, OutputError

#---------------------------------------------------------------------------------------------------
class MetaData:
    def __init__(self, path, line, column):
        self.path = path
        self.line = line
        self.column = column

    @classmethod
    def from_node(cls, node):
        return cls(node.start_mark.name, node.start_mark.line + 1, node.start_mark.column)

    def __str__(self):
        return f'path: {self.path}, line: {self.line}, column: {self.column}'

#---------------------------------------------------------------------------------------------------
# Attaching metadata needs types that accept extra attributes but behave exactly as the builtin
# ones they extend.
class CustomDict(dict): ...

class Origin:
    ''' Where a single configuration value came from. '''

    def __init__(self, metadata):
        self.___metadata___ = metadata

#---------------------------------------------------------------------------------------------------
class Loader(yaml.SafeLoader):
    def construct_custom_dict(self, node):
        # An empty mapping is yielded first so that anchors work.
        data = CustomDict()
        data.___metadata___ = MetaData.from_node(node)
        data.___origins___ = {}
        yield data

        data.update(self.construct_mapping(node))
        for key_node, _ in node.value:
            key = self.construct_object(key_node)
            data.___origins___[key] = Origin(MetaData.from_node(key_node))

Loader.add_constructor('tag:yaml.org,2002:map', Loader.construct_custom_dict)

#---------------------------------------------------------------------------------------------------
# Lines of the form "key = value" are rewritten to "key: value" in place, so line numbers are
# preserved and both file styles share the YAML loader.
_ASSIGNMENT = re.compile(r'^(\s*[A-Za-z_][\w]*)\s*=\s*', re.MULTILINE)

def load(stream, name='<config>'):
    text = stream.read() if hasattr(stream, 'read') else str(stream)
    loader = Loader(_ASSIGNMENT.sub(r'\1: ', text))
    loader.name = name
    try:
        data = loader.get_single_data()
    except yaml.MarkedYAMLError as e:
        raise ConfigError(f'Malformed configuration in {name}: {e}') from None
    finally:
        loader.dispose()

    if data is None:
        data = CustomDict()
        data.___metadata___ = MetaData(name, 1, 0)
        data.___origins___ = {}
    if not isinstance(data, dict):
        raise ConfigError(f'Root of configuration {name} must be a flat mapping, not a '
                          f'{type(data).__name__}.')
    for key, value in data.items():
        if isinstance(value, dict):
            raise ConfigError(f'Configuration {name} must be flat; "{key}" holds a mapping.')
    return data

def load_path(path):
    path = pathlib.Path(path)
    try:
        with path.open('r') as stream:
            return load(stream, str(path))
    except OSError as e:
        raise OutputError(f'Failed to read configuration "{path}": {e.strerror or e}') from None

#---------------------------------------------------------------------------------------------------
def parse_overrides(items):
    '''
    Parses "key=value" command line overrides. Values go through the YAML scalar rules, so
    numbers come back as numbers and everything else as strings.
    '''
    data = CustomDict()
    data.___metadata___ = MetaData('<command line>', 0, 0)
    data.___origins___ = {}
    for index, item in enumerate(items):
        key, sep, value = item.partition('=')
        key = key.strip()
        if not sep or not key:
            raise ConfigError(f'Override "{item}" is not of the form key=value.')
        parsed = yaml.safe_load(value) if value.strip() else ''
        if isinstance(parsed, (dict, list)) or parsed is None:
            parsed = value.strip()
        data[key] = parsed
        data.___origins___[key] = Origin(MetaData('<command line>', index + 1, len(key) + 1))
    return data
