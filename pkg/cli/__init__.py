from .cli import CLI, APP_NAME, AUTHOR, USER_CONFIG_DIR, load_config
from .__main__ import main, run_cli

__all__ = ['CLI', 'APP_NAME', 'AUTHOR', 'USER_CONFIG_DIR', 'load_config', 'main', 'run_cli']
