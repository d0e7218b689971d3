from loguru import logger

import os
import sys

LOGURU_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)


def setup_logger(save_dir=None, filename="verify_log.txt", mode="a", level="INFO"):
    """setup logger for verification runs.
    Args:
        save_dir(str): location to save log file, None for stderr only
        filename (string): log save name.
        mode(str): log file write mode, `a` appends, `o` overrides.
        level(str): minimum level on stderr.

    Reports go to stdout, so stdout is never redirected here.
    """
    logger.remove()
    logger.add(
        sys.stderr,
        format=LOGURU_FORMAT,
        level=level,
        enqueue=True,
    )
    if save_dir is not None:
        os.makedirs(save_dir, exist_ok=True)
        save_file = os.path.join(save_dir, filename)
        if mode == "o" and os.path.exists(save_file):
            os.remove(save_file)
        logger.add(save_file, level="DEBUG")
    return logger
