import os
from typing import List


class IoException(Exception):
    pass


def resolve_path(path: str) -> str:
    """ Resolve a path to a normalized, absolute path """
    return os.path.abspath(os.path.expanduser(path))


def ensure_directory_is_writable(path: str, create_mode: int = 0o755) -> str:
    """ Ensure that the specified directory is writable, creating it and """
    """ parent directories as needed. The checks are not atomic. """
    path = resolve_path(path)
    if os.path.exists(path):
        if os.path.isdir(path):
            if not os.access(path, os.W_OK):
                raise IoException(f'Directory at {path} is not writable')
            if not os.access(path, os.X_OK):
                raise IoException(f'Directory at {path} is not executable')
            return path
        else:
            raise IoException(f'Path {path} exists and is not a directory')
    try:
        os.makedirs(path, mode=create_mode, exist_ok=True)
    except OSError as error:
        raise IoException(
                f'Failed to create directory at {path}: {error}'
            ) from error
    return path


def read_text(path: str) -> str:
    path = resolve_path(path)
    try:
        with open(path, 'r', encoding='utf-8') as file:
            return file.read()
    except (OSError, UnicodeDecodeError) as error:
        raise IoException(f'Unable to read {path}: {error}') from error


def write_text(path: str, content: str) -> str:
    path = resolve_path(path)
    directory = os.path.dirname(path)
    if directory:
        ensure_directory_is_writable(directory)
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as file:
            file.write(content)
    except OSError as error:
        raise IoException(f'Unable to write {path}: {error}') from error
    return path


def list_files(directory: str, suffix: str) -> List[str]:
    """Sorted paths of regular files in a directory with the given suffix"""
    directory = resolve_path(directory)
    if not os.path.isdir(directory):
        raise IoException(f'Suite directory {directory} does not exist')
    try:
        names = sorted(os.listdir(directory))
    except OSError as error:
        raise IoException(
                f'Unable to list {directory}: {error}'
            ) from error
    return [
            os.path.join(directory, name) for name in names
            if name.endswith(suffix)
            and os.path.isfile(os.path.join(directory, name))
        ]
