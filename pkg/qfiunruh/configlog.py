# Configuration of the logs
from typing import Optional
import logging
import sys
import os

from pythonjsonlogger import jsonlogger


def config_log(file_name: Optional[str] = "",
               level: int = logging.INFO,
               json_format: bool = False,
               stream_level: Optional[int] = None) -> None:
    """Set the log configuration for the entire process

    Logs are written in the `./log` folder and on the error stream. The
    standard output is kept free for the datasets emitted by the CLI.

    :param file_name: name of the log file, None to disable the log file
    :param level: logging level, default is INFO
    :param json_format: when True the log file contains one json object per line
    :param stream_level: level of the error stream, default is level
    :return: None
    """
    message_format = "%(asctime)s - %(levelname)s - %(message)s"
    stream_handler = logging.StreamHandler(sys.stderr)
    if stream_level is not None:
        stream_handler.setLevel(stream_level)
    handlers = [stream_handler]

    if file_name is not None:
        # Create the log folder if it doesn't exist
        if os.path.isdir('./log') is False:
            os.mkdir('./log')

        log_file_name = f'log/log{"" if len(file_name) == 0 else "_"}{file_name}.txt'
        file_handler = logging.FileHandler(log_file_name)
        if json_format is True:
            file_handler.setFormatter(jsonlogger.JsonFormatter("%(asctime)s %(levelname)s %(name)s %(message)s"))
        handlers.append(file_handler)

    logging.basicConfig(format=message_format,
                        level=level,
                        handlers=handlers,
                        force=True)


if __name__ == "__main__":
    pass
