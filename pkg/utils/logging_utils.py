import logging

LOG_FORMAT = '%(asctime)s:%(levelname)s:%(message)s'


def setup_logging(log_file=None, level=logging.WARNING):
    # stdout is reserved for reports; log records go to a file or stderr
    if log_file:
        logging.basicConfig(filename=log_file, level=level, format=LOG_FORMAT, force=True)
    else:
        logging.basicConfig(level=level, format=LOG_FORMAT, force=True)


def log_message(message, level=logging.DEBUG):
    logging.getLogger("pstlab").log(level, message)
