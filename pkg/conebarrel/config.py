"""Sampling configuration shared by every law check and suite."""
import ast
import os
import pprint
from fractions import Fraction

import yaml
from tabulate import tabulate

from .errors import ConfigError, ParseError
from .scalars import format_scalar, parse_scalar

__all__ = ['SampleConfig', 'ENV_PREFIX']

ENV_PREFIX = 'CONEBARREL_'

_POSITIVE_INTS = ('sample_count', 'max_index', 'max_numerator',
                  'max_denominator', 'pool_size', 'outer_count',
                  'inner_count', 'center_count', 'u_grid_size', 'workers',
                  'max_witnesses')

# flag spellings accepted wherever a config key is
_ALIASES = {'samples': ('sample_count', ), 'max_value': ('max_numerator', 'max_denominator')}


class SampleConfig:
    """Seeded sampling parameters.

    Defaults reproduce the desk-scale acceptance runs: 10^4 samples per law,
    indices up to 8 and rationals with numerator and denominator up to 64.
    """

    def __init__(self, **overrides):
        self.seed = 0
        self.sample_count = 10000
        self.max_index = 8
        self.max_numerator = 64
        self.max_denominator = 64
        self.rho_cap = 2 ** 20
        self.w = Fraction(1)
        # per-suite sizes
        self.pool_size = 64
        self.outer_count = 500
        self.inner_count = 1000
        self.center_count = 200
        self.u_grid_size = 1000
        # execution and reporting
        self.workers = 1
        self.max_witnesses = 5
        self.record_timing = False
        self.quiet = True
        for k, v in overrides.items():
            if not hasattr(self, k):
                raise ConfigError(f'unknown config key {k!r}')
            setattr(self, k, v)

    def __repr__(self):
        table_header = ['keys', 'values']
        exp_table = [
            (str(k), format_scalar(v) if isinstance(v, Fraction) else pprint.pformat(v))
            for k, v in vars(self).items()
            if not k.startswith('_')
        ]
        return tabulate(exp_table, headers=table_header, tablefmt='fancy_grid')

    def __eq__(self, other):
        if not isinstance(other, SampleConfig):
            return NotImplemented
        return vars(self) == vars(other)

    def copy(self, **overrides) -> 'SampleConfig':
        cfg = SampleConfig()
        cfg.__dict__.update(vars(self))
        for k, v in overrides.items():
            if not hasattr(cfg, k):
                raise ConfigError(f'unknown config key {k!r}')
            setattr(cfg, k, v)
        return cfg

    def _coerce(self, key, value):
        src_value = getattr(self, key)
        if isinstance(src_value, Fraction):
            if isinstance(value, str):
                return parse_scalar(value)
            if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
                return Fraction(value)
            raise ConfigError(f'{key} needs a rational p/q, got {value!r}')
        if isinstance(src_value, bool):
            if isinstance(value, str):
                lowered = value.strip().lower()
                if lowered in ('1', 'true', 'yes', 'on'):
                    return True
                if lowered in ('0', 'false', 'no', 'off'):
                    return False
                raise ConfigError(f'{key} needs a boolean, got {value!r}')
            return bool(value)
        if src_value is not None and type(src_value) != type(value):
            try:
                value = type(src_value)(value)
            except Exception:
                value = ast.literal_eval(value)
        return value

    def merge(self, cfg_list):
        """Apply ``[KEY, VALUE, KEY, VALUE, ...]`` overrides."""
        if len(cfg_list) % 2 != 0:
            raise ConfigError(f'overrides must come in KEY VALUE pairs: {cfg_list}')
        for k, v in zip(cfg_list[0::2], cfg_list[1::2]):
            k = k.replace('-', '_')
            for key in _ALIASES.get(k, (k, )):
                # only update value with same key
                if not hasattr(self, key):
                    raise ConfigError(f'unknown config key {key!r}')
                try:
                    setattr(self, key, self._coerce(key, v))
                except (ValueError, SyntaxError, ParseError) as e:
                    raise ConfigError(f'bad value for {key}: {v!r} ({e})') from None
        return self

    def merge_env(self, environ=None, prefix=ENV_PREFIX):
        """Apply ``CONEBARREL_<KEY>`` environment overrides."""
        environ = os.environ if environ is None else environ
        pairs = []
        entries = sorted((name[len(prefix):].lower(), value) for name, value in environ.items()
                         if name.startswith(prefix))
        # aliases first; explicit fields override them
        for key, value in sorted(entries, key=lambda kv: kv[0] not in _ALIASES):
            if hasattr(self, _ALIASES.get(key, (key, ))[0]):
                pairs.extend([key, value])
        return self.merge(pairs)

    def merge_file(self, path):
        """Apply overrides from a YAML mapping."""
        with open(path, 'r') as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ConfigError(f'{path}: expected a mapping, got {type(data).__name__}')
        pairs = []
        for k, v in data.items():
            pairs.extend([str(k), v if not isinstance(v, float) else str(v)])
        return self.merge(pairs)

    def validate(self):
        for key in _POSITIVE_INTS:
            value = getattr(self, key)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f'{key} must be a positive integer, got {value!r}')
        if isinstance(self.rho_cap, bool) or not isinstance(self.rho_cap, int) \
                or self.rho_cap < 0:
            raise ConfigError(f'rho_cap must be a nonnegative integer, got {self.rho_cap!r}')
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f'seed must be an unsigned 64-bit integer, got {self.seed!r}')
        if not isinstance(self.w, Fraction) or self.w <= 0:
            raise ConfigError(f'w must be a positive rational, got {self.w!r}')
        return self
