from setuptools import setup, find_packages

setup(
    name='xshift',
    version='0.1.0',
    description='Detection and quantification of explanation shift for tabular models',
    license='MIT',
    python_requires='>=3.8',
    install_requires=[
        'numpy',
        'scipy',
        'sympy',
        'joblib',
        'pytest',
    ],
    packages=find_packages(include=['xshift', 'xshift.*', 'tests', 'tests.*']),
    entry_points={
        'console_scripts': ['xshift=xshift.cli.main:main'],
    },
)
