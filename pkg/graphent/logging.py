import logging
from datetime import datetime


LOG_FORMAT = "[%(asctime)s] %(levelname)s in %(module)s: %(message)s"


def create_logger(debug=False, log_to_file=False, disable_logging=False):
    """Configures the shared "graphent" logger.

    Library modules only ever call ``logging.getLogger("graphent")``;
    handlers are attached here, once, by the front end.

    :param debug: Sets the logger level to DEBUG, defaults to False
    :type debug: bool, optional
    :param log_to_file: Writes the log to a timestamped file in the
    current working directory instead of stderr, defaults to False
    :type log_to_file: bool, optional
    :param disable_logging: Routes all logging calls to a null handler,
    defaults to False
    :type disable_logging: bool, optional
    :return: The configured logger
    :rtype: logging.Logger
    """

    logger = logging.getLogger('graphent')
    # Repeated calls (tests, several CLI invocations in one process)
    # must not stack handlers.
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    if disable_logging:
        logger.addHandler(logging.NullHandler())
        return logger

    if debug:
        logger.setLevel(logging.DEBUG)
    else:
        logger.setLevel(logging.INFO)

    if log_to_file:
        stamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        handler = logging.FileHandler(f'./graphent {stamp}.log')
    else:
        handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)

    return logger
