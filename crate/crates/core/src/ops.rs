//! Operator boilerplate shared by the algebra element types.

/// Implements `+`, `-`, `*` and unary `-` for every owned/borrowed combination
/// of `$ty`, forwarding to inherent `add_ref`, `sub_ref`, `mul_ref` and
/// `neg_ref` methods.
#[macro_export]
#[doc(hidden)]
macro_rules! impl_ring_ops {
    ($ty:ty) => {
        $crate::impl_ring_ops!(@bin $ty, Add, add, add_ref);
        $crate::impl_ring_ops!(@bin $ty, Sub, sub, sub_ref);
        $crate::impl_ring_ops!(@bin $ty, Mul, mul, mul_ref);

        impl std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.neg_ref()
            }
        }

        impl std::ops::Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.neg_ref()
            }
        }

        impl std::ops::AddAssign<&$ty> for $ty {
            fn add_assign(&mut self, rhs: &$ty) {
                *self = self.add_ref(rhs);
            }
        }

        impl std::ops::AddAssign<$ty> for $ty {
            fn add_assign(&mut self, rhs: $ty) {
                *self = self.add_ref(&rhs);
            }
        }

        impl std::ops::SubAssign<&$ty> for $ty {
            fn sub_assign(&mut self, rhs: &$ty) {
                *self = self.sub_ref(rhs);
            }
        }

        impl std::ops::SubAssign<$ty> for $ty {
            fn sub_assign(&mut self, rhs: $ty) {
                *self = self.sub_ref(&rhs);
            }
        }
    };
    (@bin $ty:ty, $tr:ident, $method:ident, $inner:ident) => {
        impl std::ops::$tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$inner(&rhs)
            }
        }

        impl std::ops::$tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.$inner(rhs)
            }
        }

        impl std::ops::$tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$inner(&rhs)
            }
        }

        impl<'a> std::ops::$tr<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                self.$inner(rhs)
            }
        }
    };
}
