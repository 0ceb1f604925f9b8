console.log('%d apples', 3.7, 'extra', true);
console.log('%i|%f|%s', 42.9, '3.5x', 7);
console.log('%j %o %O', 1, 'two', true);
console.log('%c styled %%', 'color: red');
console.log('%s');
console.log('%d', '12px');
console.log('%x %s', 1);
console.log(1, '%s', 2);
