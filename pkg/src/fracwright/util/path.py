from pathlib import Path


def existing_file(pathspec):
    '''Return Path for an existing file, expanding ~.

    Raise ValueError if the file or its directory does not exist.
    '''
    path = Path(pathspec).expanduser()
    if not path.parent.exists():
        raise ValueError(f'directory not found: {path.parent}')
    if not path.is_file():
        raise ValueError(f'file not found: {path}')
    return path


def output_path(pathspec):
    '''Return Path for an output file, or None for standard output.

    A pathspec of None or '-' means standard output. Parent directories
    must already exist.
    '''
    if pathspec is None or str(pathspec) == '-':
        return None
    path = Path(pathspec).expanduser()
    if not path.parent.exists():
        raise ValueError(f'directory not found: {path.parent}')
    return path
