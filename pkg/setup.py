# -*- coding: utf-8 -*-

from codecs import open

from setuptools import setup, find_packages

pkg = __import__('pentapods')

with open('README.rst', encoding='utf-8') as f:
    long_description = '\n' + f.read()

setup(
    name=pkg.__name__,
    description=pkg.__doc__,
    version=pkg.__version__,
    author=pkg.__author__,
    author_email=pkg.__email__,
    url=pkg.__url__,
    license=pkg.__license__,
    packages=find_packages(exclude=('test', 'test.*')),
    package_data={pkg.__name__: list(pkg.__data__)},
    entry_points={'console_scripts': list(pkg.__scripts__)},
    install_requires=list(pkg.__dependencies__),
    extras_require={'test': ['regtest', 'hypothesis']},
    dependency_links=pkg.__dependency_links__,
    python_requires='>=3.10',
    long_description=long_description,
    long_description_content_type='text/x-rst',
    platforms='any',
    classifiers=[
        'Development Status :: ' + pkg.__dev_status__,
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
