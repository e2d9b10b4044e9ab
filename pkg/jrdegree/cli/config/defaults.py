INI_DEFAULT_FILENAME = 'jrdegree.ini'
INI_DEFAULT_PATH = f'~/.config/jrdegree/{INI_DEFAULT_FILENAME}'
