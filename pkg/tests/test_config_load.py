import pytest
from packaging.version import InvalidVersion

from src import trifree_segments
from src.trifree_segments.config.parser import _get_config_version, load_config


class TestConfigLoad:
    def test_loads_valid_version_from_toml(self):
        trifree_segments.init_logger()

        toml_data = {"inner": {"version": "1.2.3"}}
        version = _get_config_version(toml_data)
        assert str(version) == "1.2.3"

    def test_handles_missing_version_key(self):
        trifree_segments.init_logger()

        toml_data = {}
        version = _get_config_version(toml_data)
        assert str(version) == "0.0.0"

    def test_raises_error_for_invalid_version(self):
        trifree_segments.init_logger()

        toml_data = {"inner": {"version": "invalid_version"}}
        with pytest.raises(InvalidVersion):
            _get_config_version(toml_data)

    def test_missing_file_gives_defaults(self, tmp_path):
        trifree_segments.init_logger()

        config = load_config(str(tmp_path / "absent.toml"))
        assert config.INNER_VERSION is None
        assert config.solver.budget == 60.0
        assert config.solver.workers == 1
        assert config.verification.lemma_max_segments == 13
        assert config.render.significant_digits == 12

    def test_loads_complete_config_successfully(self, tmp_path):
        trifree_segments.init_logger()

        config_path = tmp_path / "config.toml"
        config_path.write_text("""
        [inner]
        version = "0.1.0"

        [build]
        rect = ["0", "0", "2", "1/2"]

        [solver]
        budget = 15
        workers = 4
        check_interval = 64

        [verification]
        lemma_max_segments = 21

        [render]
        canvas_width = 400
        stroke_scale = 0.5

        [logging]
        level = "debug"
        """)
        config = load_config(str(config_path))
        assert str(config.INNER_VERSION) == "0.1.0"
        assert config.build.rect == ("0", "0", "2", "1/2")
        assert config.solver.budget == 15.0
        assert isinstance(config.solver.budget, float)
        assert config.solver.workers == 4
        assert config.solver.check_interval == 64
        assert config.solver.exhaustive_triangle_limit == 5000
        assert config.verification.lemma_max_segments == 21
        assert config.render.canvas_width == 400
        assert config.render.canvas_height == 800
        assert config.logging.level == "DEBUG"

    def test_raises_error_for_unknown_section(self, tmp_path):
        trifree_segments.init_logger()

        config_path = tmp_path / "config.toml"
        config_path.write_text("""
        [inner]
        version = "0.1.0"

        [models]
        name = "x"
        """)
        with pytest.raises(KeyError):
            load_config(str(config_path))

    def test_raises_error_for_unknown_key(self, tmp_path):
        trifree_segments.init_logger()

        config_path = tmp_path / "config.toml"
        config_path.write_text("""
        [solver]
        timeout = 10
        """)
        with pytest.raises(KeyError):
            load_config(str(config_path))

    @pytest.mark.parametrize(
        "section",
        [
            "[solver]\nworkers = 0",
            "[solver]\nbudget = -1.0",
            "[solver]\nworkers = true",
            "[build]\nrect = [\"0\", \"0\", \"2/4\", \"1\"]",
            "[build]\nrect = [\"1\", \"0\", \"0\", \"1\"]",
            "[logging]\nlevel = \"LOUD\"",
        ],
    )
    def test_raises_error_for_malformed_values(self, tmp_path, section):
        trifree_segments.init_logger()

        config_path = tmp_path / "config.toml"
        config_path.write_text(f'[inner]\nversion = "0.1.0"\n\n{section}\n')
        with pytest.raises(ValueError):
            load_config(str(config_path))

    def test_render_section_requires_newer_version(self, tmp_path):
        trifree_segments.init_logger()

        config_path = tmp_path / "config.toml"
        config_path.write_text("""
        [inner]
        version = "0.0.5"

        [render]
        canvas_width = 400
        """)
        with pytest.raises(InvalidVersion):
            load_config(str(config_path))

    def test_template_loads(self):
        trifree_segments.init_logger()

        from pathlib import Path

        template = Path(__file__).parent.parent / "template" / "trifree_config_template.toml"
        config = load_config(str(template))
        assert str(config.INNER_VERSION) == "0.1.0"
        assert config.solver.budget == 60.0
