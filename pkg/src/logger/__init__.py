import logging
import os
from logging.handlers import RotatingFileHandler
from datetime import datetime
import sys

# Constants for log configuration
LOG_DIR = 'logs'
LOG_FILE = f"{datetime.now().strftime('%m_%d_%Y_%H_%M_%S')}.log"
MAX_LOG_SIZE = 5 * 1024 * 1024  # 5 MB
BACKUP_COUNT = 3  # Number of backup log files to keep
LOG_FORMAT = "[ %(asctime)s ] %(name)s - %(levelname)s - %(message)s"

root_dir = os.path.dirname(
    os.path.abspath(os.path.join(os.path.dirname(__file__), '../')))

_configured = False


def configure_logger(level: str = 'INFO', to_file: bool = True,
                     log_dir: str = LOG_DIR) -> None:
    """
    Configures logging with a rotating file handler and a console handler.

    The console handler writes to stderr: stdout carries the serialized
    report. Calling it again only updates the level.
    """
    global _configured
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)
    numeric_level = logging.getLevelName(level.upper())
    if not isinstance(numeric_level, int):
        numeric_level = logging.INFO

    if _configured:
        for handler in logger.handlers:
            handler.setLevel(numeric_level)
        return

    formatter = logging.Formatter(LOG_FORMAT)

    if to_file:
        log_dir_path = os.path.join(root_dir, log_dir)
        os.makedirs(log_dir_path, exist_ok=True)
        log_file_path = os.path.join(log_dir_path, LOG_FILE)
        file_handler = RotatingFileHandler(
            log_file_path, maxBytes=MAX_LOG_SIZE,
            backupCount=BACKUP_COUNT, encoding="utf-8")
        file_handler.setFormatter(formatter)
        file_handler.setLevel(numeric_level)
        logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(numeric_level)
    logger.addHandler(console_handler)
    _configured = True
