from setuptools import find_packages, setup

# read the contents of your README file
from pathlib import Path

this_directory = Path(__file__).parent
long_description = (this_directory / "README.rst").read_text()

# read the version without importing the package
version = {}
exec((this_directory / "qfiunruh" / "version.py").read_text(), version)

setup(name='qfiunruh',
      version=version['__version__'],
      long_description=long_description,
      long_description_content_type='text/x-rst',
      packages=find_packages(include=['qfiunruh', 'qfiunruh.*']),
      install_requires=['numpy>=1.23', 'scipy>=1.9', 'pandas>=1.5', 'python-json-logger>=2.0'],
      entry_points={'console_scripts': ['qfiunruh=qfiunruh.cli:main']}
      )
