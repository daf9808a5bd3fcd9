from scenario.config import ConfigError, ScenarioConfig, load_config
from scenario.run import run_scenario
