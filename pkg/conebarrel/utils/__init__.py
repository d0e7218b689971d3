from .logger import setup_logger
from .timer import Timer

__all__ = ['setup_logger', 'Timer']
