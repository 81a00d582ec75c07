import logging


def get_logger(name, level=None):
    '''Return logger for a fracwright module.

    Parameters
    ----------
    name : str
        module name, usually __name__
    level : int, optional
        logging level to set on the returned logger

    Notes
    -----
    Library modules never attach handlers. The command line entry point
    calls configure_logging() once.
    '''
    logger = logging.getLogger(name)
    if level is not None:
        logger.setLevel(level)
    return logger


def configure_logging(verbose=False):
    '''Attach a stderr handler to the fracwright root logger.'''
    root = logging.getLogger('fracwright')
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(
            logging.Formatter('%(levelname)s %(name)s: %(message)s'))
        root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return root
