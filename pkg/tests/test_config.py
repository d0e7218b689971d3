from fractions import Fraction

import pytest

from conebarrel.config import SampleConfig
from conebarrel.errors import ConfigError


class TestDefaults:

    def test_values(self):
        cfg = SampleConfig()
        assert (cfg.seed, cfg.sample_count, cfg.max_index) == (0, 10000, 8)
        assert (cfg.max_numerator, cfg.max_denominator, cfg.rho_cap) == (64, 64, 2 ** 20)
        assert cfg.w == Fraction(1)
        assert not cfg.record_timing
        cfg.validate()

    def test_repr_is_a_table(self):
        text = repr(SampleConfig())
        assert 'sample_count' in text and '1/1' in text

    def test_unknown_override(self):
        with pytest.raises(ConfigError):
            SampleConfig(samples_per_law=3)

    def test_copy_is_independent(self):
        cfg = SampleConfig(seed=3)
        other = cfg.copy(sample_count=5)
        assert other.seed == 3 and other.sample_count == 5
        assert cfg.sample_count == 10000
        assert cfg == cfg.copy()


class TestMerge:

    def test_coerces_from_strings(self):
        cfg = SampleConfig().merge(['seed', '9', 'w', '1/2', 'record-timing', 'true'])
        assert cfg.seed == 9 and cfg.w == Fraction(1, 2) and cfg.record_timing is True

    def test_aliases(self):
        cfg = SampleConfig().merge(['samples', '12', 'max_value', '5'])
        assert cfg.sample_count == 12
        assert (cfg.max_numerator, cfg.max_denominator) == (5, 5)

    def test_max_value_then_denominator(self):
        cfg = SampleConfig().merge(['max_value', '9', 'max_denominator', '3'])
        assert (cfg.max_numerator, cfg.max_denominator) == (9, 3)
        env = {'CONEBARREL_MAX_DENOMINATOR': '4', 'CONEBARREL_MAX_VALUE': '7'}
        cfg = SampleConfig().merge_env(env)
        assert (cfg.max_numerator, cfg.max_denominator) == (7, 4)

    @pytest.mark.parametrize('pairs', [['seed'], ['nope', '1'], ['w', '0.5'],
                                       ['record_timing', 'maybe'], ['seed', 'x']])
    def test_errors(self, pairs):
        with pytest.raises(ConfigError):
            SampleConfig().merge(pairs)

    def test_env(self):
        environ = {'CONEBARREL_SEED': '11', 'CONEBARREL_SAMPLES': '40', 'HOME': '/root',
                   'CONEBARREL_UNRELATED': 'x'}
        cfg = SampleConfig().merge_env(environ)
        assert cfg.seed == 11 and cfg.sample_count == 40

    def test_yaml_file(self, tmp_path):
        path = tmp_path / 'cfg.yaml'
        path.write_text('seed: 5\nw: 3/2\nmax_index: 3\n')
        cfg = SampleConfig().merge_file(str(path))
        assert (cfg.seed, cfg.w, cfg.max_index) == (5, Fraction(3, 2), 3)

    def test_yaml_must_be_mapping(self, tmp_path):
        path = tmp_path / 'cfg.yaml'
        path.write_text('- 1\n- 2\n')
        with pytest.raises(ConfigError):
            SampleConfig().merge_file(str(path))


class TestValidate:

    @pytest.mark.parametrize('overrides', [{'sample_count': 0}, {'max_index': -1},
                                           {'w': Fraction(0)}, {'seed': -1},
                                           {'seed': 2 ** 64}, {'rho_cap': -1},
                                           {'workers': True}])
    def test_rejects(self, overrides):
        with pytest.raises(ConfigError):
            SampleConfig(**overrides).validate()

    def test_rho_cap_zero_allowed(self):
        SampleConfig(rho_cap=0).validate()
