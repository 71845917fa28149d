"""Copy qfiunruh.__version__ into the manifest and the docs, then test and build the release

Run from the repository root. Pass --upload to send the distribution to PyPI.
"""
import glob
import re
import shutil
import subprocess
import sys

import qfiunruh

VERSION_PATTERNS = {
    'pyproject.toml': (r'^version = ".+"', 'version = "{}"'),
    'docs/conf.py': (r"^release = '.+'", "release = '{}'"),
    'README.rst': (r'^\* Version: .+', '* Version: {}'),
    'docs/index.rst': (r'^\* Version: .+', '* Version: {}'),
}


def set_version(version: str) -> None:
    for path, (pattern, replacement) in VERSION_PATTERNS.items():
        with open(path) as f:
            content = f.read()
        content, n = re.subn(pattern, replacement.format(version), content, flags=re.MULTILINE)
        if n != 1:
            raise SystemExit(f'{path}: expected one version line, found {n}')
        with open(path, 'w') as f:
            f.write(content)


def run(*command: str) -> None:
    if subprocess.run(command).returncode != 0:
        raise SystemExit(f'"{" ".join(command)}" failed, version not released')


if __name__ == "__main__":
    set_version(qfiunruh.__version__)
    run(sys.executable, '-m', 'unittest', 'discover', '-s', 'test', '-t', '.')
    run('sphinx-build', '-b', 'html', 'docs', 'docs/_build/html')
    shutil.rmtree('dist', ignore_errors=True)
    run(sys.executable, '-m', 'build')
    if '--upload' in sys.argv[1:]:
        run(sys.executable, '-m', 'twine', 'upload', *glob.glob('dist/*'))
